#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eoplab {

/// Arbitrary-precision rational, kept in canonical form by GMP.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline double to_double(const Rational& q) { return q.get_d(); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q(s);  // throws std::invalid_argument on bad input
    q.canonicalize();
    return q;
}

inline long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("to_long: " + to_string(q) + " is not a machine integer");
    return q.get_num().get_si();
}

inline Rational pow_int(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = base;
    if (exp < 0) {
        if (sgn(b) == 0) throw std::domain_error("pow_int: zero base with negative exponent");
        b = Rational(1) / b;
    }
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), e);
    Rational r(num);
    r /= Rational(den);
    return r;
}

inline Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace eoplab
