#include "eoplab/wavefunctions.hpp"

#include <cmath>
#include <stdexcept>

#include "eoplab/hermite.hpp"

namespace eoplab {

double NormSquared::value() const {
    return to_double(rational_part) * std::pow(std::sqrt(M_PI), sqrt_pi_power);
}

NormSquared NormSquared::inverse() const {
    if (rational_part == 0) throw std::domain_error("NormSquared::inverse: zero norm");
    return {Rational(1 / rational_part), -sqrt_pi_power};
}

Rational operator/(const NormSquared& a, const NormSquared& b) {
    if (a.sqrt_pi_power != b.sqrt_pi_power) {
        throw std::domain_error("NormSquared: ratio is irrational");
    }
    return a.rational_part / b.rational_part;
}

std::string NormSquared::str() const {
    std::string s = to_string(rational_part);
    if (sqrt_pi_power == 0) return s;
    s += "*sqrt(pi)";
    if (sqrt_pi_power != 1) s += "^" + std::to_string(sqrt_pi_power);
    return s;
}

namespace detail {

void check_state_index(int m, Side side, int nu) {
    if (m < 2 || m % 2 != 0) {
        throw std::domain_error("state index: m must be a positive even integer");
    }
    if (side == Side::plus) {
        if (nu < 0) throw std::domain_error("state index: oscillator side needs nu >= 0");
        return;
    }
    if (nu == -(m + 1) || nu >= 0) return;
    throw std::domain_error("state index: nu inside the spectral gap");
}

}  // namespace detail

RationalFn eigenstate_prefactor(int m, Side side, int nu) {
    detail::check_state_index(m, side, nu);
    if (side == Side::plus) return RationalFn(hermite(nu));
    const Poly den = pseudo_hermite(m);
    if (nu == -(m + 1)) return RationalFn(Poly(rational(1)), den);
    return RationalFn(eop_y(m, nu + m + 1), den);
}

QuasiGaussian eigenstate(int m, Side side, int nu) {
    return {eigenstate_prefactor(m, side, nu), -1};
}

NormSquared eigenstate_norm_squared(int m, Side side, int nu) {
    detail::check_state_index(m, side, nu);
    if (side == Side::plus) {
        return {pow_int(rational(2), nu) * factorial(nu), 1};
    }
    if (nu == -(m + 1)) {
        return {1 / (pow_int(rational(2), m) * factorial(m)), 1};
    }
    return {pow_int(rational(2), nu + 1) * rational(nu + m + 1) * factorial(nu), 1};
}

Rational eigenstate_energy(int m, Side side, int nu) {
    detail::check_state_index(m, side, nu);
    return rational(2L * (nu + m + 1));
}

}  // namespace eoplab
