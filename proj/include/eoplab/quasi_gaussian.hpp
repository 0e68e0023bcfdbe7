#pragma once

#include <stdexcept>

#include "eoplab/rational_fn.hpp"

namespace eoplab {

/// A function of the form pre(x) * exp(sigma * x^2 / 2) with rational pre and
/// sigma in {-1, +1}.  This family is closed under differentiation and under
/// every operator this project applies, so all state manipulations stay exact.
struct QuasiGaussian {
    RationalFn pre;
    int sigma = -1;

    QuasiGaussian() = default;
    QuasiGaussian(RationalFn pre_, int sigma_) : pre(std::move(pre_)), sigma(sigma_) {
        if (sigma != -1 && sigma != 1) {
            throw std::domain_error("QuasiGaussian: sigma must be -1 or +1");
        }
    }

    bool is_zero() const { return pre.is_zero(); }

    QuasiGaussian derivative() const {
        return {pre.derivative() + RationalFn::variable() * RationalFn::constant(rational(sigma)) * pre,
                sigma};
    }

    friend QuasiGaussian operator*(const Rational& s, const QuasiGaussian& f) {
        return {RationalFn::constant(s) * f.pre, f.sigma};
    }

    friend QuasiGaussian operator+(const QuasiGaussian& a, const QuasiGaussian& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.sigma != b.sigma) {
            throw std::domain_error("QuasiGaussian: cannot add mixed exponential weights");
        }
        return {a.pre + b.pre, a.sigma};
    }

    friend QuasiGaussian operator-(const QuasiGaussian& a, const QuasiGaussian& b) {
        return a + rational(-1) * b;
    }

    /// Equal when both are the same function; any sigma pairs with zero.
    friend bool operator==(const QuasiGaussian& a, const QuasiGaussian& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.sigma == b.sigma && a.pre == b.pre;
    }
};

}  // namespace eoplab
