#pragma once

#include <vector>

#include "eoplab/operators.hpp"
#include "eoplab/verification.hpp"

namespace eoplab {

/// w(x) = -x - P_m'(x)/P_m(x), the superpotential whose factorization pair
/// connects the shifted oscillator to its rational extension.  m must be a
/// positive even integer so that P_m has no real zeros.
RationalFn build_superpotential(int m);

/// A = d/dx + w.  Its adjoint intertwines the two partner Hamiltonians.
FirstOrderOperator supercharge(int m);

/// The ordinary oscillator shifted to H(+) = -d^2/dx^2 + x^2 + 2m + 1,
/// i.e. A^dag A.
HamiltonianSpec oscillator_hamiltonian(int m);

/// V(-) = x^2 - 2 [P_m''/P_m - (P_m'/P_m)^2 + 1]; regular on the whole line.
RationalFn build_partner_potential(int m);

/// H(-) = -d^2/dx^2 + V(-) + 2m + 1 = A A^dag, the rational extension.
HamiltonianSpec partner_hamiltonian(int m);

/// P_m exp(+x^2/2): the (non-normalizable) function annihilated by A, which
/// pins the factorization energy of the pair.
QuasiGaussian supercharge_zero_mode(int m);

/// Step potentials of the factorization chain that climbs from the plain
/// oscillator to the extension one index at a time:
///   w_i(x) = x + P_{i-1}'/P_{i-1} - P_i'/P_i,  i = 1..m.
/// Every one of them is singular somewhere on the real line, so the chain
/// operators only act on auxiliary functions and are flagged accordingly.
RationalFn hat_superpotential(int m, int i);

/// The i-th chain operator, d/dx + w_i, with is_auxiliary set.
FirstOrderOperator hat_supercharge(int m, int i);

/// Intermediate Hamiltonians of the chain, i = 1..m+1:
///   -d^2/dx^2 + x^2 - 2 (P_{i-1}'/P_{i-1})' - 3.
HamiltonianSpec hat_hamiltonian(int m, int i);

/// All chain operators in application order (index 1 first).
std::vector<FirstOrderOperator> build_hat_chain(int m);

/// Exhaustively checks the factorization and intertwining identities of the
/// pair and its chain on a family of probe functions; every comparison is an
/// exact rational-function equality.  The overload taking a chain exists so
/// that a deliberately corrupted chain can be shown to fail.
VerificationReport verify_chain_identities(int m);
VerificationReport verify_chain_identities(int m, const std::vector<FirstOrderOperator>& chain);

}  // namespace eoplab
