#include "eoplab/rational_fn.hpp"

#include <ostream>
#include <stdexcept>

namespace eoplab {

RationalFn::RationalFn(Poly num) : num_(std::move(num)), den_(Poly(rational(1))) {}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(rational(1));
        return;
    }
    if (den_.degree() > 0) {
        const Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        num_ *= Rational(1 / lead);
        den_ = den_.monic();
    }
}

Rational RationalFn::constant_value() const {
    if (!is_constant()) throw std::domain_error("RationalFn::constant_value: not constant");
    return num_.coeff(0) / den_.coeff(0);
}

Rational RationalFn::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d == 0) throw std::domain_error("RationalFn: evaluation at a pole");
    return num_(x) / d;
}

RationalFn RationalFn::derivative() const {
    // (n/d)' = (n'd - nd') / d^2; the constructor re-reduces.
    return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFn RationalFn::operator-() const {
    RationalFn out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
    *this = RationalFn(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) {
    *this = RationalFn(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
    *this = RationalFn(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& rhs) {
    if (rhs.is_zero()) throw std::domain_error("RationalFn: division by zero");
    *this = RationalFn(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

std::string RationalFn::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFn& f) { return os << f.str(); }

}  // namespace eoplab
