#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eoplab/rational.hpp"

namespace eoplab {

/// Dense univariate polynomial over exact rationals.
///
/// Coefficients are stored in ascending powers; a nonzero polynomial never
/// carries a zero leading coefficient.  The zero polynomial has degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();
    static Poly monomial(Rational coeff, int power);
    /// Monic product (x - r_0)(x - r_1)...
    static Poly from_roots(std::span<const Rational> roots);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    const Rational& leading() const;

    /// Horner evaluation.
    Rational operator()(const Rational& x) const;
    /// Horner evaluation in floating point (for quadrature cross-checks only).
    double eval_double(double x) const;

    Poly derivative() const;
    bool is_monic() const;
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
    friend Poly operator*(const Rational& s, Poly p) { return p *= s; }

    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Euclidean division: returns {quotient, remainder}.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    /// Division that must leave no remainder.
    Poly exact_div(const Poly& den) const;

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<Rational> coeffs_;
    void trim();
};

/// Monic greatest common divisor; poly_gcd(p, 0) is monic(p).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Certificate of strict positivity on the whole real line: only even powers,
/// no negative coefficients, positive constant term.  (Sufficient, not
/// necessary; it covers every even-index pseudo-Hermite polynomial.)
bool is_positive_even_form(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace eoplab
