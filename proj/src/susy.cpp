#include "eoplab/susy.hpp"

#include <stdexcept>

#include "eoplab/hermite.hpp"
#include "eoplab/wavefunctions.hpp"

namespace eoplab {

namespace {

void check_even_m(int m) {
    if (m < 2 || m % 2 != 0) {
        throw std::domain_error("factorization: m must be a positive even integer");
    }
}

RationalFn log_derivative(const Poly& p) { return RationalFn(p.derivative(), p); }

}  // namespace

RationalFn build_superpotential(int m) {
    check_even_m(m);
    return -RationalFn::variable() - log_derivative(pseudo_hermite(m));
}

FirstOrderOperator supercharge(int m) { return {1, build_superpotential(m), false}; }

HamiltonianSpec oscillator_hamiltonian(int m) {
    check_even_m(m);
    const RationalFn x = RationalFn::variable();
    return {x * x, rational(2L * m + 1)};
}

RationalFn build_partner_potential(int m) {
    check_even_m(m);
    const Poly p = pseudo_hermite(m);
    const RationalFn x = RationalFn::variable();
    const RationalFn ratio2 = RationalFn(p.derivative(), p) * RationalFn(p.derivative(), p);
    const RationalFn curvature = RationalFn(p.derivative().derivative(), p);
    return x * x -
           RationalFn::constant(rational(2)) *
               (curvature - ratio2 + RationalFn::constant(rational(1)));
}

HamiltonianSpec partner_hamiltonian(int m) {
    return {build_partner_potential(m), rational(2L * m + 1)};
}

QuasiGaussian supercharge_zero_mode(int m) {
    check_even_m(m);
    return {RationalFn(pseudo_hermite(m)), 1};
}

RationalFn hat_superpotential(int m, int i) {
    check_even_m(m);
    if (i < 1 || i > m) throw std::domain_error("hat_superpotential: i out of range 1..m");
    return RationalFn::variable() + log_derivative(pseudo_hermite(i - 1)) -
           log_derivative(pseudo_hermite(i));
}

FirstOrderOperator hat_supercharge(int m, int i) {
    // Every step potential has a pole on the real line, so the whole chain
    // only ever acts on auxiliary functions.
    return {1, hat_superpotential(m, i), true};
}

HamiltonianSpec hat_hamiltonian(int m, int i) {
    check_even_m(m);
    if (i < 1 || i > m + 1) throw std::domain_error("hat_hamiltonian: i out of range 1..m+1");
    const RationalFn x = RationalFn::variable();
    return {x * x - RationalFn::constant(rational(2)) *
                        log_derivative(pseudo_hermite(i - 1)).derivative(),
            rational(-3)};
}

std::vector<FirstOrderOperator> build_hat_chain(int m) {
    check_even_m(m);
    std::vector<FirstOrderOperator> chain;
    chain.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) chain.push_back(hat_supercharge(m, i));
    return chain;
}

VerificationReport verify_chain_identities(int m) {
    return verify_chain_identities(m, build_hat_chain(m));
}

VerificationReport verify_chain_identities(int m, const std::vector<FirstOrderOperator>& chain) {
    check_even_m(m);
    if (static_cast<int>(chain.size()) != m) {
        throw std::domain_error("verify_chain_identities: chain must have m operators");
    }
    VerificationReport report;

    std::vector<std::pair<std::string, QuasiGaussian>> probes;
    for (const int sigma : {-1, +1}) {
        for (int k = 0; k <= 3; ++k) {
            std::string name = k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k));
            name += sigma < 0 ? " exp(-x^2/2)" : " exp(+x^2/2)";
            probes.emplace_back(std::move(name),
                                QuasiGaussian{RationalFn(Poly::monomial(rational(1), k)), sigma});
        }
    }
    for (int nu = -(m + 1); nu <= 6; nu == -(m + 1) ? nu = 0 : ++nu) {
        probes.emplace_back("psi(" + std::to_string(nu) + ")", eigenstate(m, Side::minus, nu));
    }

    const FirstOrderOperator a = supercharge(m);
    const HamiltonianSpec h_plus = oscillator_hamiltonian(m);
    const HamiltonianSpec h_minus = partner_hamiltonian(m);

    auto for_probes = [&](const std::string& id, auto&& lhs, auto&& rhs) {
        for (const auto& [name, f] : probes) report.record(id, name, lhs(f) == rhs(f));
    };

    for (int i = 1; i <= m; ++i) {
        const FirstOrderOperator& ai = chain[static_cast<size_t>(i - 1)];
        const HamiltonianSpec hi = hat_hamiltonian(m, i);
        const HamiltonianSpec hi_next = hat_hamiltonian(m, i + 1);
        for_probes(
            "adj(A_i) A_i == H_i [i=" + std::to_string(i) + "]",
            [&](const QuasiGaussian& f) { return ai.adjoint().apply(ai.apply(f)); },
            [&](const QuasiGaussian& f) { return hi.apply(f); });
        for_probes(
            "A_i adj(A_i) == H_{i+1} + 2 [i=" + std::to_string(i) + "]",
            [&](const QuasiGaussian& f) { return ai.apply(ai.adjoint().apply(f)); },
            [&](const QuasiGaussian& f) { return hi_next.apply(f) + rational(2) * f; });
    }
    for (int i = 1; i < m; ++i) {
        const FirstOrderOperator& ai = chain[static_cast<size_t>(i - 1)];
        const FirstOrderOperator& an = chain[static_cast<size_t>(i)];
        for_probes(
            "adj(A_{i+1}) A_{i+1} - A_i adj(A_i) == -2 [i=" + std::to_string(i) + "]",
            [&](const QuasiGaussian& f) {
                return an.adjoint().apply(an.apply(f)) - ai.apply(ai.adjoint().apply(f));
            },
            [&](const QuasiGaussian& f) { return rational(-2) * f; });
    }

    for_probes(
        "adj(A) A == H(+)",
        [&](const QuasiGaussian& f) { return a.adjoint().apply(a.apply(f)); },
        [&](const QuasiGaussian& f) { return h_plus.apply(f); });
    for_probes(
        "A adj(A) == H(-)",
        [&](const QuasiGaussian& f) { return a.apply(a.adjoint().apply(f)); },
        [&](const QuasiGaussian& f) { return h_minus.apply(f); });

    {
        // The constant term may sit in the potential on one side and in the
        // shift on the other; only the sum is meaningful.
        auto total = [](const HamiltonianSpec& h) {
            return h.potential + RationalFn::constant(h.shift);
        };
        const HamiltonianSpec h1 = hat_hamiltonian(m, 1);
        report.record(
            "H(+) == H_1 + (2m+4)", "potential",
            total(h_plus) == total(h1) + RationalFn::constant(rational(2L * m + 4)));
        const HamiltonianSpec h_last = hat_hamiltonian(m, m + 1);
        report.record(
            "H(-) == H_{m+1} + (2m+2)", "potential",
            total(h_minus) == total(h_last) + RationalFn::constant(rational(2L * m + 2)));
    }

    for_probes(
        "A H(+) == H(-) A",
        [&](const QuasiGaussian& f) { return a.apply(h_plus.apply(f)); },
        [&](const QuasiGaussian& f) { return h_minus.apply(a.apply(f)); });
    for_probes(
        "adj(A) H(-) == H(+) adj(A)",
        [&](const QuasiGaussian& f) { return a.adjoint().apply(h_minus.apply(f)); },
        [&](const QuasiGaussian& f) { return h_plus.apply(a.adjoint().apply(f)); });

    auto chain_apply = [&](QuasiGaussian f) {
        for (const FirstOrderOperator& op : chain) f = op.apply(f);
        return f;
    };
    for_probes(
        "chain(A_m..A_1) H(+) == (H(-) + 2m+2) chain(A_m..A_1)",
        [&](const QuasiGaussian& f) { return chain_apply(h_plus.apply(f)); },
        [&](const QuasiGaussian& f) {
            const QuasiGaussian g = chain_apply(f);
            return h_minus.apply(g) + rational(2L * m + 2) * g;
        });

    report.record("A annihilates P_m exp(+x^2/2)", "zero mode",
                  a.apply(supercharge_zero_mode(m)).is_zero());
    report.record("adj(A) annihilates psi(-(m+1))", "extension ground state",
                  a.adjoint().apply(eigenstate(m, Side::minus, -(m + 1))).is_zero());
    return report;
}

}  // namespace eoplab
