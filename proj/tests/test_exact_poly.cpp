#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "eoplab/hermite.hpp"
#include "eoplab/polynomial.hpp"
#include "eoplab/rational_fn.hpp"

using namespace eoplab;

namespace {

// Deterministic pseudo-random polynomials for property checks.
struct PolyGen {
    std::mt19937 rng{20240511};

    Rational coeff() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 4);
        return rational(num(rng), den(rng));
    }

    Poly poly(int max_degree) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        const int d = deg(rng);
        std::vector<Rational> c(static_cast<size_t>(d) + 1);
        for (auto& x : c) x = coeff();
        return Poly(std::move(c));
    }

    Poly nonzero_poly(int max_degree) {
        for (;;) {
            Poly p = poly(max_degree);
            if (!p.is_zero()) return p;
        }
    }
};

// Independent route to H_n: the operator identity H_{n+1} = 2x H_n - H_n'.
Poly hermite_oracle(int n) {
    Poly p(rational(1));
    const Poly two_x = Poly::monomial(rational(2), 1);
    for (int k = 0; k < n; ++k) p = two_x * p - p.derivative();
    return p;
}

// Independent route to the sign-flipped family: map coefficients of H_m
// through x -> ix followed by the phase (-i)^m.  Parity makes every
// surviving power differ from m by an even number, so the factor is just
// (-1)^((m-k)/2) on the x^k coefficient.
Poly pseudo_hermite_oracle(int m) {
    const Poly h = hermite(m);
    std::vector<Rational> c(static_cast<size_t>(m) + 1, rational(0));
    for (int k = m; k >= 0; k -= 2) {
        const int half = (m - k) / 2;
        c[static_cast<size_t>(k)] = (half % 2 == 0 ? h.coeff(k) : Rational(-h.coeff(k)));
    }
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    const Poly x = Poly::variable();
    const Poly p = x * x - rational(3) * x + Poly(rational(2));

    CHECK(p.degree() == 2);
    CHECK(p(rational(1)) == 0);
    CHECK(p(rational(2)) == 0);
    CHECK(p(rational(0)) == 2);
    CHECK(p(rational(1, 2)) == rational(3, 4));

    CHECK(Poly().degree() == -1);
    CHECK(Poly().is_zero());
    CHECK((p - p).is_zero());
    CHECK((p + (-p)).is_zero());
    CHECK((Poly(rational(0))).is_zero());

    // Leading zeros must never survive construction or arithmetic.
    const Poly q(std::vector<Rational>{rational(5), rational(0), rational(0)});
    CHECK(q.degree() == 0);
    const Poly cancel = Poly::monomial(rational(1), 3) + Poly::monomial(rational(-1), 3);
    CHECK(cancel.is_zero());
}

TEST_CASE("polynomial multiplication and scaling") {
    const Poly x = Poly::variable();
    const Poly a = x + Poly(rational(1));
    const Poly b = x - Poly(rational(1));
    CHECK(a * b == x * x - Poly(rational(1)));
    CHECK((a * rational(0)).is_zero());
    CHECK(rational(2) * a == a + a);

    PolyGen gen;
    for (int trial = 0; trial < 50; ++trial) {
        const Poly p = gen.poly(6);
        const Poly q = gen.poly(6);
        const Poly r = gen.poly(4);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
        const Rational pt = gen.coeff();
        CHECK((p * q)(pt) == p(pt) * q(pt));
    }
}

TEST_CASE("derivative follows the product rule") {
    PolyGen gen;
    for (int trial = 0; trial < 30; ++trial) {
        const Poly p = gen.poly(6);
        const Poly q = gen.poly(6);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
        CHECK((p + q).derivative() == p.derivative() + q.derivative());
    }
    CHECK(Poly(rational(7)).derivative().is_zero());
}

TEST_CASE("euclidean division invariant") {
    PolyGen gen;
    for (int trial = 0; trial < 60; ++trial) {
        const Poly a = gen.poly(9);
        const Poly b = gen.nonzero_poly(5);
        const auto [q, r] = Poly::divmod(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(Poly::divmod(Poly::variable(), Poly()), std::domain_error);
}

TEST_CASE("exact division round-trips and rejects remainders") {
    PolyGen gen;
    for (int trial = 0; trial < 30; ++trial) {
        const Poly p = gen.nonzero_poly(5);
        const Poly q = gen.nonzero_poly(5);
        CHECK((p * q).exact_div(q) == p);
    }
    const Poly x = Poly::variable();
    CHECK_THROWS_AS((x * x + Poly(rational(1))).exact_div(x), std::domain_error);
}

TEST_CASE("gcd is monic and divides both arguments") {
    PolyGen gen;
    for (int trial = 0; trial < 40; ++trial) {
        const Poly a = gen.nonzero_poly(5);
        const Poly b = gen.nonzero_poly(5);
        const Poly g = poly_gcd(a, b);
        CHECK(g.is_monic());
        CHECK(Poly::divmod(a, g).second.is_zero());
        CHECK(Poly::divmod(b, g).second.is_zero());

        // A common factor must show up in the gcd.
        const Poly c = gen.nonzero_poly(3);
        const Poly g2 = poly_gcd(a * c, b * c);
        CHECK(Poly::divmod(g2, c.monic()).second.is_zero());
    }
    CHECK(poly_gcd(Poly(), Poly::variable()) == Poly::variable());
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), std::domain_error);
}

TEST_CASE("from_roots builds the monic annihilator") {
    const std::vector<Rational> roots{rational(1), rational(-2), rational(1, 3)};
    const Poly p = Poly::from_roots(roots);
    CHECK(p.degree() == 3);
    CHECK(p.is_monic());
    for (const auto& r : roots) CHECK(p(r) == 0);
    CHECK(Poly::from_roots(std::span<const Rational>{}) == Poly(rational(1)));
}

TEST_CASE("polynomial printing") {
    const Poly x = Poly::variable();
    CHECK(Poly().str() == "0");
    CHECK(Poly(rational(-3, 2)).str() == "-3/2");
    CHECK((x * x * rational(2) - x * rational(3) + Poly(rational(1))).str() ==
          "2*x^2 - 3*x + 1");
    CHECK((-x).str() == "-x");
    CHECK((x * x - Poly(rational(1))).str("t") == "t^2 - 1");
}

TEST_CASE("rational functions reduce to canonical form") {
    const Poly x = Poly::variable();
    const Poly num = (x - Poly(rational(1))) * (x + Poly(rational(2))) * rational(3);
    const Poly den = (x - Poly(rational(1))) * rational(6);
    const RationalFn f(num, den);
    CHECK(f.den().is_monic());
    CHECK(f.den() == Poly(rational(1)));
    CHECK(f.num() == (x + Poly(rational(2))) * rational(1, 2));
    CHECK(f.is_polynomial());

    const RationalFn g(Poly(rational(1)), x * rational(4));
    CHECK(g.den() == x);
    CHECK(g.num() == Poly(rational(1, 4)));

    CHECK(RationalFn().is_zero());
    CHECK(RationalFn(Poly(), x).den() == Poly(rational(1)));
    CHECK_THROWS_AS(RationalFn(x, Poly()), std::domain_error);
}

TEST_CASE("rational function field operations") {
    PolyGen gen;
    for (int trial = 0; trial < 25; ++trial) {
        const RationalFn f(gen.poly(4), gen.nonzero_poly(3));
        const RationalFn g(gen.poly(4), gen.nonzero_poly(3));
        const RationalFn h(gen.poly(3), gen.nonzero_poly(2));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == RationalFn());
        if (!g.is_zero()) CHECK((f / g) * g == f);
    }
    CHECK_THROWS_AS(RationalFn::variable() / RationalFn(), std::domain_error);
}

TEST_CASE("rational function derivative and evaluation") {
    const Poly x = Poly::variable();
    const RationalFn f(Poly(rational(1)), x);  // 1/x
    CHECK(f.derivative() == RationalFn(Poly(rational(-1)), x * x));
    CHECK(f(rational(2)) == rational(1, 2));
    CHECK_THROWS_AS(f(rational(0)), std::domain_error);

    // Quotient rule against an independently computed closed form:
    // d/dx [(x^2+1)/(x-1)] = (x^2 - 2x - 1)/(x-1)^2.
    const RationalFn g(x * x + Poly(rational(1)), x - Poly(rational(1)));
    const RationalFn expect(x * x - rational(2) * x - Poly(rational(1)),
                            (x - Poly(rational(1))) * (x - Poly(rational(1))));
    CHECK(g.derivative() == expect);

    CHECK(RationalFn::constant(rational(5, 3)).constant_value() == rational(5, 3));
    CHECK_THROWS_AS(f.constant_value(), std::domain_error);
}

TEST_CASE("Hermite polynomials match the operator-form oracle") {
    for (int n = 0; n <= 20; ++n) CHECK(hermite(n) == hermite_oracle(n));

    const Poly x = Poly::variable();
    CHECK(hermite(0) == Poly(rational(1)));
    CHECK(hermite(1) == rational(2) * x);
    CHECK(hermite(2) == rational(4) * x * x - Poly(rational(2)));
    CHECK(hermite(4).str() == "16*x^4 - 48*x^2 + 12");
    CHECK_THROWS_AS(hermite(-1), std::domain_error);
}

TEST_CASE("Hermite differential relations") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(hermite(n).derivative() == rational(2L * n) * hermite(n - 1));
        const Poly h = hermite(n);
        const Poly ode = h.derivative().derivative() -
                         rational(2) * Poly::variable() * h.derivative() +
                         rational(2L * n) * h;
        CHECK(ode.is_zero());
    }
}

TEST_CASE("sign-flipped family matches the imaginary-argument oracle") {
    for (int m = 0; m <= 20; ++m) CHECK(pseudo_hermite(m) == pseudo_hermite_oracle(m));

    const Poly x = Poly::variable();
    CHECK(pseudo_hermite(2) == rational(4) * x * x + Poly(rational(2)));
    CHECK(pseudo_hermite(4).str() == "16*x^4 + 48*x^2 + 12");
    CHECK_THROWS_AS(pseudo_hermite(-3), std::domain_error);
}

TEST_CASE("sign-flipped family differential relations") {
    for (int m = 1; m <= 12; ++m) {
        const Poly p = pseudo_hermite(m);
        CHECK(p.derivative() == rational(2L * m) * pseudo_hermite(m - 1));
        const Poly ode = p.derivative().derivative() +
                         rational(2) * Poly::variable() * p.derivative() -
                         rational(2L * m) * p;
        CHECK(ode.is_zero());
    }
}

TEST_CASE("even members of the sign-flipped family are strictly positive") {
    for (int m = 0; m <= 16; m += 2) {
        const Poly p = pseudo_hermite(m);
        CHECK(is_positive_even_form(p));

        // Sanity-check the certificate against direct evaluation.
        std::mt19937 rng(777 + static_cast<unsigned>(m));
        std::uniform_int_distribution<long> num(-500, 500);
        std::uniform_int_distribution<long> den(1, 40);
        for (int trial = 0; trial < 500; ++trial) {
            CHECK(p(rational(num(rng), den(rng))) > 0);
        }
    }
    // Odd members vanish at the origin, so the certificate must refuse them.
    CHECK_FALSE(is_positive_even_form(pseudo_hermite(3)));
    CHECK_FALSE(is_positive_even_form(Poly()));
    CHECK_FALSE(is_positive_even_form(-pseudo_hermite(2)));
}

TEST_CASE("extension numerators: degrees, gaps, and a frozen value") {
    CHECK(eop_y(2, 0) == Poly(rational(1)));
    CHECK_THROWS_AS(eop_y(2, 1), std::domain_error);
    CHECK_THROWS_AS(eop_y(2, 2), std::domain_error);
    CHECK_THROWS_AS(eop_y(0, 3), std::domain_error);
    CHECK_THROWS_AS(eop_y(2, -1), std::domain_error);

    const Poly x = Poly::variable();
    CHECK(eop_y(2, 3) == rational(-8) * x * x * x - rational(12) * x);
    CHECK(eop_y(2, 3).str() == "-8*x^3 - 12*x");

    for (int m = 1; m <= 5; ++m) {
        for (int n = m + 1; n <= m + 8; ++n) {
            CHECK(eop_y(m, n).degree() == n);
        }
    }
}

TEST_CASE("extension numerators share no factor with an even-index denominator") {
    // Even m keeps the denominator root-free on the real line, so nothing can
    // cancel; that is the regime in which the extended potentials are regular.
    for (int m = 2; m <= 6; m += 2) {
        const Poly den = pseudo_hermite(m);
        for (int n = m + 1; n <= m + 8; ++n) {
            const RationalFn f(eop_y(m, n), den);
            CHECK(f.num().degree() == n);
            CHECK(f.den() == den.monic());
        }
    }
    // Odd m puts a zero of the denominator at the origin; whenever the
    // numerator inherits it (odd nu) exactly one factor of x drops out.
    const RationalFn odd_case(eop_y(3, 5), pseudo_hermite(3));  // m = 3, nu = 1
    CHECK(odd_case.num().degree() == 4);
    CHECK(odd_case.den().degree() == 2);
}

TEST_CASE("rational helpers") {
    CHECK(rational(6, 4) == rational(3, 2));
    CHECK(to_string(rational(-3, 2)) == "-3/2");
    CHECK(to_string(rational(5)) == "5");
    CHECK(parse_rational("22/7") == rational(22, 7));
    CHECK(parse_rational("-4") == rational(-4));
    CHECK_THROWS_AS(rational(1, 0), std::domain_error);
    CHECK(is_integer(rational(8, 2)));
    CHECK_FALSE(is_integer(rational(1, 3)));
    CHECK(to_long(rational(-12)) == -12);
    CHECK_THROWS_AS(to_long(rational(1, 2)), std::domain_error);
    CHECK(pow_int(rational(2, 3), 3) == rational(8, 27));
    CHECK(pow_int(rational(2, 3), -2) == rational(9, 4));
    CHECK(pow_int(rational(5), 0) == 1);
    CHECK_THROWS_AS(pow_int(rational(0), -1), std::domain_error);
    CHECK(factorial(6) == 720);
    CHECK(to_double(rational(1, 4)) == doctest::Approx(0.25));
}
