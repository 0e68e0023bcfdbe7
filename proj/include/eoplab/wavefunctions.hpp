#pragma once

#include <string>

#include "eoplab/quasi_gaussian.hpp"

namespace eoplab {

/// Which partner of the factorized pair a state belongs to.
enum class Side { plus, minus };

/// Exact squared norm written as rational_part * sqrt(pi)^sqrt_pi_power.
struct NormSquared {
    Rational rational_part;
    int sqrt_pi_power = 1;

    double value() const;
    NormSquared inverse() const;
    friend NormSquared operator*(const NormSquared& a, const NormSquared& b) {
        return {a.rational_part * b.rational_part, a.sqrt_pi_power + b.sqrt_pi_power};
    }
    friend Rational operator/(const NormSquared& a, const NormSquared& b);
    bool operator==(const NormSquared&) const = default;
    std::string str() const;
};

/// Polynomial-over-denominator part of the bound states.
///
/// Side::plus is the shifted oscillator: any nu >= 0, prefactor H_nu.
/// Side::minus is the rational extension: nu = -(m+1) is the isolated ground
/// state with prefactor 1/P_m, and nu >= 0 gives y_{nu+m+1}/P_m.  Indices in
/// the gap -(m+1) < nu < 0 do not correspond to states and throw.
RationalFn eigenstate_prefactor(int m, Side side, int nu);

/// The full (unnormalized) bound state: prefactor times exp(-x^2/2).
QuasiGaussian eigenstate(int m, Side side, int nu);

/// <psi, psi> for the unnormalized states above, exactly.
NormSquared eigenstate_norm_squared(int m, Side side, int nu);

/// Both partners share E_nu = 2 (nu + m + 1); the extension's extra ground
/// state sits at exactly 0.
Rational eigenstate_energy(int m, Side side, int nu);

namespace detail {
/// Shared validation for the (m, side, nu) index space.
void check_state_index(int m, Side side, int nu);
}  // namespace detail

}  // namespace eoplab
