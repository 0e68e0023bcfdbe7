#pragma once

#include "eoplab/polynomial.hpp"

namespace eoplab {

/// Physicists' Hermite polynomial H_n, n >= 0.
Poly hermite(int n);

/// Counterpart with the sign of the three-term recurrence flipped:
///   P_0 = 1,  P_1 = 2x,  P_{m+1} = 2x P_m + 2m P_{m-1}.
/// Even-index members are strictly positive on the real line, which is what
/// makes them usable as denominators of regular rational potentials.
Poly pseudo_hermite(int m);

/// Numerator polynomial y_n of the rational-extension eigenfunctions built on
/// pseudo_hermite(m).  Defined for n == 0 and n >= m+1; the indices 1..m are
/// energy gaps and raise std::domain_error.  For n = nu + m + 1:
///   y_n = -P_m H_{nu+1} - 2m P_{m-1} H_nu.
Poly eop_y(int m, int n);

}  // namespace eoplab
