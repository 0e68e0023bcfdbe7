#include "eoplab/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace eoplab {

Poly::Poly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::variable() { return Poly(std::vector<Rational>{rational(0), rational(1)}); }

Poly Poly::monomial(Rational coeff, int power) {
    if (power < 0) throw std::domain_error("Poly::monomial: negative power");
    if (coeff == 0) return Poly();
    std::vector<Rational> c(static_cast<size_t>(power) + 1, rational(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

Poly Poly::from_roots(std::span<const Rational> roots) {
    Poly p(rational(1));
    for (const Rational& r : roots) {
        p = p * Poly(std::vector<Rational>{-r, rational(1)});
    }
    return p;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = rational(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + to_double(*it);
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = rational(static_cast<long>(k)) * coeffs_[k];
    }
    return Poly(std::move(d));
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Poly Poly::monic() const {
    if (coeffs_.empty()) throw std::domain_error("Poly::monic: zero polynomial");
    Poly out = *this;
    const Rational lead = coeffs_.back();
    for (Rational& c : out.coeffs_) c /= lead;
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (Rational& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), rational(0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), rational(0));
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (Rational& c : coeffs_) c *= s;
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<Rational> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, rational(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(prod));
}

namespace {

// Integer kernel shared by the gcd and the exact division.  Euclid over Q
// makes the fractions inside the remainders explode; clearing denominators
// once and working with primitive integer polynomials keeps every step in
// (cheap) mpz arithmetic.
using ZPoly = std::vector<mpz_class>;  // ascending powers, trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const mpz_class& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void make_primitive(ZPoly& p) {
    if (p.empty()) return;
    mpz_class g = zcontent(p);
    if (p.back() < 0) g = -g;  // normalize to a positive leading coefficient
    if (g == 1) return;
    for (mpz_class& c : p) c /= g;
}

ZPoly primitive_from(const Poly& p) {
    mpz_class lcm = 1;
    for (const Rational& c : p.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) out.push_back(c.get_num() * (lcm / c.get_den()));
    make_primitive(out);
    return out;
}

// Splits a nonzero polynomial into rational content times integer primitive
// part (positive leading coefficient): p == content * primitive.
std::pair<Rational, ZPoly> detail_decompose(const Poly& p) {
    mpz_class lcm = 1;
    for (const Rational& c : p.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly ints;
    ints.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) ints.push_back(c.get_num() * (lcm / c.get_den()));
    mpz_class g = zcontent(ints);
    if (ints.back() < 0) g = -g;
    for (mpz_class& c : ints) c /= g;
    Rational content{g, lcm};
    content.canonicalize();
    return {std::move(content), std::move(ints)};
}

// Pseudo-remainder: the remainder of lead(b)^k * a by b for some k >= 0.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - b.size();
        for (mpz_class& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

// Exact quotient over the integers; throws when the division leaves anything.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    if (num.size() < den.size())
        throw std::domain_error("Poly::exact_div: nonzero remainder");
    const mpz_class& lb = den.back();
    ZPoly q(num.size() - den.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class& top = num[k + den.size() - 1];
        if (top % lb != 0) throw std::domain_error("Poly::exact_div: nonzero remainder");
        q[k] = top / lb;
        if (q[k] != 0)
            for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= q[k] * den[i];
    }
    for (const mpz_class& c : num)
        if (c != 0) throw std::domain_error("Poly::exact_div: nonzero remainder");
    return q;
}

}  // namespace

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    Poly rem = num;
    if (num.degree() < den.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<size_t>(num.degree() - den.degree()) + 1, rational(0));
    const Rational& lead = den.leading();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        const int shift = rem.degree() - den.degree();
        const Rational factor = rem.leading() / lead;
        q[static_cast<size_t>(shift)] = factor;
        rem -= Poly::monomial(factor, shift) * den;
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& den) const {
    if (den.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    if (is_zero()) return Poly();
    if (den.degree() == 0) {
        Poly out = *this;
        Rational inv = 1 / den.coeffs_[0];
        return out *= inv;
    }
    // Division without remainder can run entirely over the integers: with both
    // operands split into content times primitive part, the primitive quotient
    // is again an integer polynomial, so no fractions appear in the loop.
    auto [num_content, num_prim] = detail_decompose(*this);
    auto [den_content, den_prim] = detail_decompose(den);
    ZPoly quotient = zdiv_exact(std::move(num_prim), den_prim);
    Rational scale = num_content / den_content;
    std::vector<Rational> out;
    out.reserve(quotient.size());
    for (const mpz_class& c : quotient) out.push_back(Rational(c) * scale);
    return Poly(std::move(out));
}

std::string Poly::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (k == 0) {
            os << to_string(mag);
        } else {
            if (!unit) os << to_string(mag) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::domain_error("poly_gcd: gcd of two zero polynomials");
    }
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();

    ZPoly r0 = primitive_from(a);
    ZPoly r1 = primitive_from(b);
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (!r1.empty()) {
        ZPoly r2 = zprem(std::move(r0), r1);
        make_primitive(r2);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(r0.size());
    for (const mpz_class& c : r0) coeffs.push_back(Rational(c));
    return Poly(std::move(coeffs)).monic();
}

bool is_positive_even_form(const Poly& p) {
    if (p.is_zero()) return false;
    if (p.coeff(0) <= 0) return false;
    for (int k = 1; k <= p.degree(); ++k) {
        const Rational c = p.coeff(k);
        if (k % 2 == 1) {
            if (c != 0) return false;
        } else if (c < 0) {
            return false;
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace eoplab
