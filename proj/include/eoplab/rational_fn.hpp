#pragma once

#include <string>

#include "eoplab/polynomial.hpp"

namespace eoplab {

/// Ratio of two polynomials, kept in canonical form: numerator and denominator
/// coprime, denominator monic.  Zero is represented as 0/1.
class RationalFn {
  public:
    RationalFn() : num_(), den_(Poly(rational(1))) {}
    explicit RationalFn(Poly num);
    RationalFn(Poly num, Poly den);

    static RationalFn variable() { return RationalFn(Poly::variable()); }
    static RationalFn constant(Rational c) { return RationalFn(Poly(std::move(c))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    /// Throws std::domain_error at a pole.
    Rational operator()(const Rational& x) const;
    /// Floating-point evaluation (used by the quadrature cross-checks).
    double eval_double(double x) const { return num_.eval_double(x) / den_.eval_double(x); }

    RationalFn derivative() const;

    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& rhs);
    RationalFn& operator-=(const RationalFn& rhs);
    RationalFn& operator*=(const RationalFn& rhs);
    RationalFn& operator/=(const RationalFn& rhs);

    friend RationalFn operator+(RationalFn lhs, const RationalFn& rhs) { return lhs += rhs; }
    friend RationalFn operator-(RationalFn lhs, const RationalFn& rhs) { return lhs -= rhs; }
    friend RationalFn operator*(RationalFn lhs, const RationalFn& rhs) { return lhs *= rhs; }
    friend RationalFn operator/(RationalFn lhs, const RationalFn& rhs) { return lhs /= rhs; }

    bool operator==(const RationalFn& rhs) const = default;

    std::string str(const std::string& var = "x") const;

  private:
    Poly num_;
    Poly den_;
    void reduce();
};

std::ostream& operator<<(std::ostream& os, const RationalFn& f);

}  // namespace eoplab
