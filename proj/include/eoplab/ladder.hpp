#pragma once

#include <vector>

#include "eoplab/operators.hpp"
#include "eoplab/verification.hpp"
#include "eoplab/wavefunctions.hpp"

namespace eoplab {

/// Product of first-order operators written in notation order: factors.front()
/// is the leftmost symbol, so application runs from the back.
struct OperatorChain {
    std::vector<FirstOrderOperator> factors;

    OperatorChain adjoint() const;
    QuasiGaussian apply(QuasiGaussian f) const;
};

/// The (2m+1)-th order ladder pair of the rational extension:
///   raising = A adj(A^_1) ... adj(A^_m), lowering = its adjoint,
/// moving eigenvalues by +/- lambda = 2m+2.
struct LadderPair {
    OperatorChain raising;
    OperatorChain lowering;
    Rational lambda;
};

LadderPair build_ladder(int m);

/// Data of the polynomial Heisenberg algebra the pair generates:
/// lowering-then-raising acts as q(H), raising-then-lowering as q(H + lambda).
struct PHASpec {
    int m = 0;
    Poly q;           // q(E) = E * prod_{i=1..m} (E - 2m - 2 - 2i)
    Rational lambda;  // 2m + 2
};

PHASpec pha_spec(int m);

/// Exact matrix-element data of one raising step from state nu.
struct LadderCoefficient {
    Rational scale;      // raising(psi_nu) = scale * psi_{nu+m+1} (unnormalized)
    Rational c_squared;  // squared normalized matrix element
};

LadderCoefficient ladder_coefficient(int m, int nu);

/// True when the lowering operator sends psi_nu to exactly zero; such nu are
/// the bottoms of the irreducible towers.
bool lowering_annihilates(int m, int nu);

/// Splits {-(m+1)} union {0..nu_max} into the m+1 towers the ladder pair
/// generates; each tower lists indices bottom-up, stepping by m+1.
std::vector<std::vector<int>> unirrep_partition(int m, int nu_max);

/// Verifies, state by state up to nu_max, that the pair realizes its algebra:
/// raised states solve the shifted eigenvalue problem, both operator orders
/// act as the characteristic polynomial predicts, the commutator closes, and
/// the kernel is exactly the set of tower bottoms.
VerificationReport verify_pha(int m, int nu_max);

}  // namespace eoplab
