#include "eoplab/ladder.hpp"

#include <stdexcept>

#include "eoplab/susy.hpp"

namespace eoplab {

OperatorChain OperatorChain::adjoint() const {
    OperatorChain out;
    out.factors.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        out.factors.push_back(it->adjoint());
    }
    return out;
}

QuasiGaussian OperatorChain::apply(QuasiGaussian f) const {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        f = it->apply(f);
    }
    return f;
}

LadderPair build_ladder(int m) {
    OperatorChain raising;
    raising.factors.push_back(supercharge(m));
    for (int i = 1; i <= m; ++i) {
        raising.factors.push_back(hat_supercharge(m, i).adjoint());
    }
    return {raising, raising.adjoint(), rational(2L * m + 2)};
}

PHASpec pha_spec(int m) {
    if (m < 2 || m % 2 != 0) {
        throw std::domain_error("pha_spec: m must be a positive even integer");
    }
    std::vector<Rational> roots{rational(0)};
    for (int i = 1; i <= m; ++i) roots.push_back(rational(2L * m + 2 + 2L * i));
    return {m, Poly::from_roots(roots), rational(2L * m + 2)};
}

LadderCoefficient ladder_coefficient(int m, int nu) {
    const LadderPair ladder = build_ladder(m);
    const QuasiGaussian raised = ladder.raising.apply(eigenstate(m, Side::minus, nu));
    const QuasiGaussian target = eigenstate(m, Side::minus, nu + m + 1);
    const RationalFn ratio = raised.pre / target.pre;
    if (!ratio.is_constant()) {
        throw VerificationError("ladder_coefficient: raised state is not proportional to "
                                "the target eigenstate");
    }
    const Rational scale = ratio.constant_value();
    const Rational c2 = scale * scale *
                        (eigenstate_norm_squared(m, Side::minus, nu + m + 1) /
                         eigenstate_norm_squared(m, Side::minus, nu));
    return {scale, c2};
}

bool lowering_annihilates(int m, int nu) {
    const LadderPair ladder = build_ladder(m);
    return ladder.lowering.apply(eigenstate(m, Side::minus, nu)).is_zero();
}

std::vector<std::vector<int>> unirrep_partition(int m, int nu_max) {
    if (m < 2 || m % 2 != 0) {
        throw std::domain_error("unirrep_partition: m must be a positive even integer");
    }
    if (nu_max < 0) throw std::domain_error("unirrep_partition: nu_max must be >= 0");
    std::vector<std::vector<int>> towers;
    std::vector<int> bottoms{-(m + 1)};
    for (int i = 1; i <= m; ++i) bottoms.push_back(i);
    for (const int bottom : bottoms) {
        std::vector<int> tower;
        for (int nu = bottom; nu <= nu_max; nu += m + 1) tower.push_back(nu);
        // A cutoff below a tower's bottom leaves that tower unseen.
        if (!tower.empty()) towers.push_back(std::move(tower));
    }
    return towers;
}

VerificationReport verify_pha(int m, int nu_max) {
    const LadderPair ladder = build_ladder(m);
    const PHASpec spec = pha_spec(m);
    const HamiltonianSpec h = partner_hamiltonian(m);
    VerificationReport report;

    auto probe_name = [](int nu) { return "psi(" + std::to_string(nu) + ")"; };

    for (int nu = -(m + 1); nu <= nu_max; nu == -(m + 1) ? nu = 0 : ++nu) {
        const QuasiGaussian psi = eigenstate(m, Side::minus, nu);
        const Rational energy = eigenstate_energy(m, Side::minus, nu);
        const QuasiGaussian raised = ladder.raising.apply(psi);
        const QuasiGaussian lowered = ladder.lowering.apply(psi);

        // Both routes computed honestly: H applied to the raised state, and
        // the raised state rescaled by the shifted eigenvalue.
        report.record("H (c+ psi) == (E + lambda) (c+ psi)", probe_name(nu),
                      h.apply(raised) == (energy + ladder.lambda) * raised);

        report.record("c+ psi proportional to psi(nu + m + 1)", probe_name(nu),
                      (raised.pre / eigenstate_prefactor(m, Side::minus, nu + m + 1))
                          .is_constant());

        report.record("c+ c- psi == q(E) psi", probe_name(nu),
                      ladder.raising.apply(lowered) == spec.q(energy) * psi);
        report.record("c- c+ psi == q(E + lambda) psi", probe_name(nu),
                      ladder.lowering.apply(raised) ==
                          spec.q(energy + spec.lambda) * psi);
        report.record("[c-, c+] psi == (q(E + lambda) - q(E)) psi", probe_name(nu),
                      ladder.lowering.apply(raised) - ladder.raising.apply(lowered) ==
                          (spec.q(energy + spec.lambda) - spec.q(energy)) * psi);

        const bool bottom = (nu == -(m + 1)) || (nu >= 1 && nu <= m);
        report.record(bottom ? "c- annihilates tower bottom"
                             : "c- psi proportional to psi(nu - m - 1)",
                      probe_name(nu),
                      bottom ? lowered.is_zero()
                             : (!lowered.is_zero() &&
                                (lowered.pre /
                                 eigenstate_prefactor(m, Side::minus, nu - m - 1))
                                    .is_constant()));
    }

    // The commutation relation [H, c+] = lambda c+ holds as an operator
    // identity, so exercise it on functions that are not eigenstates too.
    for (const int sigma : {-1, +1}) {
        for (int k = 0; k <= 2; ++k) {
            const QuasiGaussian f{RationalFn(Poly::monomial(rational(1), k)), sigma};
            const QuasiGaussian cf = ladder.raising.apply(f);
            const std::string name = "x^" + std::to_string(k) +
                                     (sigma < 0 ? " exp(-x^2/2)" : " exp(+x^2/2)");
            report.record("[H, c+] == lambda c+", name,
                          h.apply(cf) - ladder.raising.apply(h.apply(f)) ==
                              ladder.lambda * cf);
        }
    }
    return report;
}

}  // namespace eoplab
