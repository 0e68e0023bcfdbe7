#pragma once

#include <vector>

#include "eoplab/quasi_gaussian.hpp"

namespace eoplab {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Hermite rule with n nodes (weight function exp(-x^2)).  Rules are
/// cached; the returned reference stays valid for the program lifetime.
const QuadratureRule& gauss_hermite(int n);

/// Numerical <f, g> = integral of f*g over the real line.
///
/// Both factors must decay (sigma == -1) and must carry denominators that the
/// even-form positivity certificate accepts, otherwise the integral is not
/// known to exist and a std::domain_error is thrown.  Node counts are
/// increased until two successive estimates agree to ~1e-12 relative.
double inner_product(const QuasiGaussian& f, const QuasiGaussian& g);

/// Same integral with a fixed node count (no adaptivity).
double inner_product(const QuasiGaussian& f, const QuasiGaussian& g, int nodes);

}  // namespace eoplab
