#pragma once

#include "eoplab/quasi_gaussian.hpp"

namespace eoplab {

/// eps * d/dx + w(x) with eps in {-1, +1}.  The formal adjoint on the line
/// flips the sign of the derivative term.  Operators whose superpotential is
/// singular on the real axis (so they only connect auxiliary, non-normalizable
/// functions) are marked is_auxiliary.
struct FirstOrderOperator {
    int eps = 1;
    RationalFn w;
    bool is_auxiliary = false;

    FirstOrderOperator adjoint() const { return {-eps, w, is_auxiliary}; }
    QuasiGaussian apply(const QuasiGaussian& f) const;
};

/// H = -d^2/dx^2 + potential(x) + shift, applied exactly to quasi-Gaussians.
struct HamiltonianSpec {
    RationalFn potential;
    Rational shift;

    QuasiGaussian apply(const QuasiGaussian& f) const;
};

}  // namespace eoplab
