#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eoplab/polynomial.hpp"
#include "eoplab/rational.hpp"

namespace eoplab {

/// Which pair of one-dimensional factors makes up the planar model.
enum class SystemKind {
    case1 = 1,  // rational extension in x, ordinary oscillator in y
    case2 = 2,  // rational extensions in both coordinates
};

/// Static data of a separable planar Hamiltonian H = H_x + H_y together with
/// the ladder bookkeeping needed to close its symmetry algebra polynomially.
///
/// Both factors are taken in the "bare" normalization where the oscillator
/// spectrum is 2 nu + 1; the extension in x then has levels
///   {-(2 m1 + 1)} union {2 nu + 1 : nu >= 0},
/// and analogously in y for case 2.  Total energies are E = 2 N with integer
/// level index N >= n_ground.
struct SystemSpec {
    SystemKind kind = SystemKind::case1;
    int m1 = 0;              // extension index of the x factor (even, >= 2)
    std::optional<int> m2;   // extension index of the y factor (case 2 only)

    Rational lambda_x;       // x ladder shift: 2 m1 + 2
    Rational lambda_y;       // y ladder shift: 2 for case 1, 2 m2 + 2 for case 2
    int n1 = 0;              // x ladder applications per symmetry step
    int n2 = 0;              // y ladder applications per symmetry step
    Rational lambda;         // common step n1 * lambda_x == n2 * lambda_y

    // Characteristic polynomials of the two ladders in bare energies:
    // lowering-then-raising on a state of energy e has eigenvalue q_x(e)
    // (resp. s_y(e)); raising-then-lowering shifts the argument up one step.
    Poly q_x;
    Poly s_y;
    std::vector<Rational> q_roots;  // ground root first, then interior roots ascending
    std::vector<Rational> s_roots;

    int integral_order = 0;  // degree in E of the structure function
    long long n_ground = 0;  // lowest occupied level index

    int case_number() const { return static_cast<int>(kind); }

    bool operator==(const SystemSpec&) const = default;
};

SystemSpec build_case1(int m);
SystemSpec build_case2(int m1, int m2);

/// The minimal commensurate ladder powers for two extensions: smallest
/// (n1, n2) with n1 * (2 m1 + 2) == n2 * (2 m2 + 2).
std::pair<int, int> reduced_ladder_choice(int m1, int m2);

/// Eigenvalue of the product X+ X- of the two symmetry generators on the
/// window state at position x of the multiplet labelled by (E, u):
///
///   Phi(E, u, x) = prod_{i=1..n1} q_x(E/2 + lambda (x + u) - (n1 - i) lambda_x)
///                * prod_{j=1..n2} s_y(E/2 - lambda (x + u) + j lambda_y)
///
/// Here E/2 + lambda (x + u) is the x-factor energy of the window state and
/// E/2 - lambda (x + u) the y-factor energy.
Rational structure_function(const SystemSpec& sys, const Rational& E, const Rational& u,
                            const Rational& x);

/// A finite unitary multiplet of the symmetry algebra: window states
/// x = 0..p, all of total energy E, with Phi vanishing at x = 0 and x = p + 1
/// and positive in between.
struct Unirrep {
    std::string family;                // "A"/"B" (case 1), "AA".."BB" (case 2), "" from the solver
    std::map<std::string, int> params; // family labels, always including "p"
    Rational u;                        // window offset
    Rational energy;                   // total energy E = 2 n_level
    long long n_level = 0;
    int p = 0;                         // highest window position
    int dimension = 1;                 // p + 1
    std::vector<Rational> structure_values;  // Phi at x = 1..p (empty when p == 0)

    bool operator==(const Unirrep&) const = default;
};

/// All multiplets with window length p <= p_max, from the closed-form families:
///
/// case 1 (bottom anchored on the x factor, top on the y factor):
///   A: ground bottom,    E = 2 [(m+1) p + 1 - k],               k = 1..m+1
///   B: interior bottom l, E = 2 [(m+1)(p+1) + l - k + 1],       l = 1..m
/// case 2 (P = (m1+1)(m2+1); bottom root choice x interior r, top y interior t):
///   AA: E = 2 [P (p+2) - (m1+1) q - (m2+1) s - (m1+m2+1)]
///   AB: E = AA + 2 (m2 + 1 + t)
///   BA: E = 2 [P (p+2) - (m1+1) q - (m2+1) s - m2 + r]
///   BB: E = 2 [P (p+2) - (m1+1) q - (m2+1) s + r + t + 1]
///   with q = 1..m2+1, s = 1..m1+1, r = 1..m1, t = 1..m2.
///
/// Sorted by (energy, family, p, params); all entries pass verify_unirrep.
std::vector<Unirrep> enumerate_unirreps(const SystemSpec& sys, int p_max);

/// True when every window state maps onto genuine bound states under all four
/// ladder chains: walking each chain, the per-step squared matrix elements
/// q_x(...) / s_y(...) must stay positive until the first zero (annihilation).
/// A negative value before a zero certifies a non-normalizable intermediate
/// state, so the window is spurious.
bool window_is_unitary(const SystemSpec& sys, const Rational& E, const Rational& u, int p);

/// Finds the multiplets at a given energy without using the closed forms:
/// candidate offsets u are read off the linear factors of Phi(E, u, 0), each
/// candidate window is grown until the first zero of Phi, and the unitarity
/// filter discards spurious solutions.  Returns the same (E, u, p, Phi) data
/// as enumerate_unirreps restricted to that energy.
std::vector<Unirrep> generic_unirrep_solver(const SystemSpec& sys, const Rational& E, int p_max);

/// Degeneracy of level N from the closed formula (0 when the level is absent).
long long degeneracy_formula(const SystemSpec& sys, long long n);

/// Independent check: counts separable product eigenstates level by level.
std::map<long long, long long> brute_force_spectrum(const SystemSpec& sys, long long n_max);

/// Multiplet pattern of one level: window lengths (descending), multiplet
/// count, and total degeneracy.  A level that does not occur yields an empty
/// pattern with zero counts.
struct TableRow {
    long long n = 0;
    std::vector<int> ps;
    long long n_unirreps = 0;
    long long degeneracy = 0;

    bool operator==(const TableRow&) const = default;
};

/// Closed-form pattern of level n.  Case 2 requires m1 == m2 here; unequal
/// indices are covered by spectrum_report only.
TableRow expected_table_row(const SystemSpec& sys, long long n);

struct LevelEntry {
    long long n = 0;
    Rational energy;
    long long degeneracy = 0;
    std::vector<int> ps;      // window lengths of the multiplets, descending
    long long n_unirreps = 0;

    bool operator==(const LevelEntry&) const = default;
};

struct SpectrumReport {
    SystemSpec system;
    long long n_max = 0;
    std::vector<LevelEntry> levels;

    bool operator==(const SpectrumReport&) const = default;
};

/// Smallest window bound that captures every multiplet up to level n_max.
int default_p_max(const SystemSpec& sys, long long n_max);

/// Levels n_ground..n_max with their multiplet patterns, assembled from
/// enumerate_unirreps and cross-checked against degeneracy_formula; a mismatch
/// throws VerificationError.
SpectrumReport spectrum_report(const SystemSpec& sys, long long n_max, int p_max = -1);

/// Full consistency check of one multiplet: bookkeeping fields, boundary
/// zeros, interior positivity, stored Phi values, and the unitarity filter.
bool verify_unirrep(const SystemSpec& sys, const Unirrep& rep);

}  // namespace eoplab
