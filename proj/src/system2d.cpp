#include "eoplab/system2d.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "eoplab/parallel.hpp"
#include "eoplab/verification.hpp"

namespace eoplab {

namespace {

void check_extension_index(const char* where, int m) {
    if (m < 2 || m % 2 != 0)
        throw std::domain_error(std::string(where) + ": extension index must be a positive even integer");
}

// Bare-energy characteristic roots of one extension ladder: the ground level
// -(2m+1) plus the interior kernel levels 1+2i, i = 1..m.
std::vector<Rational> extension_roots(int m) {
    std::vector<Rational> roots;
    roots.reserve(m + 1);
    roots.emplace_back(-(2 * m + 1));
    for (int i = 1; i <= m; ++i) roots.emplace_back(1 + 2 * i);
    return roots;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Sort key used for deterministic listings: family, then parameters
// lexicographically, with energy and offset as tie-breakers for the
// anonymous multiplets the solver returns.
bool unirrep_less(const Unirrep& a, const Unirrep& b) {
    return std::tie(a.family, a.params, a.energy, a.u) <
           std::tie(b.family, b.params, b.energy, b.u);
}

Unirrep make_unirrep(const SystemSpec& sys, std::string family, std::map<std::string, int> params,
                     const Rational& E, const Rational& u, int p) {
    Unirrep rep;
    rep.family = std::move(family);
    rep.params = std::move(params);
    rep.params["p"] = p;
    rep.u = u;
    rep.energy = E;
    Rational half = E / 2;
    if (!is_integer(half))
        throw std::logic_error("make_unirrep: total energy is not an even integer");
    rep.n_level = to_long(half);
    rep.p = p;
    rep.dimension = p + 1;
    rep.structure_values.reserve(p);
    for (int x = 1; x <= p; ++x)
        rep.structure_values.push_back(structure_function(sys, E, u, rational(x)));
    return rep;
}

}  // namespace

SystemSpec build_case1(int m) {
    check_extension_index("build_case1", m);
    SystemSpec sys;
    sys.kind = SystemKind::case1;
    sys.m1 = m;
    sys.lambda_x = rational(2 * m + 2);
    sys.lambda_y = rational(2);
    sys.n1 = 1;
    sys.n2 = m + 1;
    sys.lambda = rational(2 * (m + 1));
    sys.q_roots = extension_roots(m);
    sys.s_roots = {rational(1)};
    sys.q_x = Poly::from_roots(sys.q_roots);
    sys.s_y = Poly::from_roots(sys.s_roots);
    sys.integral_order = sys.n1 * sys.q_x.degree() + sys.n2 * sys.s_y.degree();
    sys.n_ground = -m;
    return sys;
}

SystemSpec build_case2(int m1, int m2) {
    check_extension_index("build_case2", m1);
    check_extension_index("build_case2", m2);
    if (m1 < m2) throw std::domain_error("build_case2: indices must satisfy m1 >= m2");
    SystemSpec sys;
    sys.kind = SystemKind::case2;
    sys.m1 = m1;
    sys.m2 = m2;
    sys.lambda_x = rational(2 * m1 + 2);
    sys.lambda_y = rational(2 * m2 + 2);
    sys.n1 = m2 + 1;
    sys.n2 = m1 + 1;
    sys.lambda = rational(2 * (m1 + 1) * (m2 + 1));
    sys.q_roots = extension_roots(m1);
    sys.s_roots = extension_roots(m2);
    sys.q_x = Poly::from_roots(sys.q_roots);
    sys.s_y = Poly::from_roots(sys.s_roots);
    sys.integral_order = sys.n1 * sys.q_x.degree() + sys.n2 * sys.s_y.degree();
    sys.n_ground = -(m1 + m2 + 1);
    return sys;
}

std::pair<int, int> reduced_ladder_choice(int m1, int m2) {
    check_extension_index("reduced_ladder_choice", m1);
    check_extension_index("reduced_ladder_choice", m2);
    int g = std::gcd(m1 + 1, m2 + 1);
    return {(m2 + 1) / g, (m1 + 1) / g};
}

Rational structure_function(const SystemSpec& sys, const Rational& E, const Rational& u,
                            const Rational& x) {
    Rational hx = E / 2 + sys.lambda * (x + u);
    Rational hy = E / 2 - sys.lambda * (x + u);
    Rational value = rational(1);
    for (int i = 1; i <= sys.n1; ++i) value *= sys.q_x(hx - rational(sys.n1 - i) * sys.lambda_x);
    for (int j = 1; j <= sys.n2; ++j) value *= sys.s_y(hy + rational(j) * sys.lambda_y);
    return value;
}

std::vector<Unirrep> enumerate_unirreps(const SystemSpec& sys, int p_max) {
    if (p_max < 0) throw std::domain_error("enumerate_unirreps: p_max must be >= 0");

    // Collect the family labels first, then evaluate the structure function in
    // parallel: every slot is independent.
    struct Member {
        std::string family;
        std::map<std::string, int> params;
        Rational E;
        Rational u;
        int p;
    };
    std::vector<Member> members;

    if (sys.kind == SystemKind::case1) {
        const int m = sys.m1;
        const Rational lam = sys.lambda;  // 2 (m+1)
        for (int p = 0; p <= p_max; ++p) {
            for (int k = 1; k <= m + 1; ++k) {
                Rational E = rational(2 * ((m + 1) * p + 1 - k));
                Rational u = (-E / 2 - rational(2 * m + 1)) / lam;
                members.push_back({"A", {{"k", k}}, E, u, p});
            }
            for (int l = 1; l <= m; ++l)
                for (int k = 1; k <= m + 1; ++k) {
                    Rational E = rational(2 * ((m + 1) * (p + 1) + l - k + 1));
                    Rational u = (-E / 2 + rational(2 * l + 1)) / lam;
                    members.push_back({"B", {{"l", l}, {"k", k}}, E, u, p});
                }
        }
    } else {
        const int m1 = sys.m1;
        const int m2 = *sys.m2;
        const long long P = static_cast<long long>(m1 + 1) * (m2 + 1);
        const Rational lam = sys.lambda;  // 2 P
        auto bottom_ground = [&](const Rational& E, int q) -> Rational {
            return (-E / 2 + sys.lambda_x * rational(m2 + 1 - q) - rational(2 * m1 + 1)) / lam;
        };
        auto bottom_interior = [&](const Rational& E, int q, int r) -> Rational {
            return (-E / 2 + sys.lambda_x * rational(m2 + 1 - q) + rational(2 * r + 1)) / lam;
        };
        for (int p = 0; p <= p_max; ++p) {
            long long base = P * (p + 2);
            for (int q = 1; q <= m2 + 1; ++q)
                for (int s = 1; s <= m1 + 1; ++s) {
                    long long core = base - static_cast<long long>(m1 + 1) * q -
                                     static_cast<long long>(m2 + 1) * s;
                    {
                        Rational E = rational(2 * (core - (m1 + m2 + 1)));
                        members.push_back({"AA", {{"q", q}, {"s", s}}, E, bottom_ground(E, q), p});
                    }
                    for (int t = 1; t <= m2; ++t) {
                        Rational E = rational(2 * (core - m1 + t));
                        members.push_back(
                            {"AB", {{"q", q}, {"s", s}, {"t", t}}, E, bottom_ground(E, q), p});
                    }
                    for (int r = 1; r <= m1; ++r) {
                        Rational E = rational(2 * (core - m2 + r));
                        members.push_back(
                            {"BA", {{"q", q}, {"s", s}, {"r", r}}, E, bottom_interior(E, q, r), p});
                    }
                    for (int r = 1; r <= m1; ++r)
                        for (int t = 1; t <= m2; ++t) {
                            Rational E = rational(2 * (core + r + t + 1));
                            members.push_back({"BB",
                                               {{"q", q}, {"s", s}, {"r", r}, {"t", t}},
                                               E,
                                               bottom_interior(E, q, r),
                                               p});
                        }
                }
        }
    }

    std::vector<Unirrep> reps(members.size());
    parallel_for(members.size(), [&](std::size_t i) {
        Member& mem = members[i];
        reps[i] = make_unirrep(sys, std::move(mem.family), std::move(mem.params), mem.E, mem.u,
                               mem.p);
    });
    std::sort(reps.begin(), reps.end(), unirrep_less);
    return reps;
}

bool window_is_unitary(const SystemSpec& sys, const Rational& E, const Rational& u, int p) {
    // Walk one ladder chain: squared matrix elements must stay positive until
    // the chain terminates on a zero.  Negative before that means the walk
    // left the physical state space.
    auto chain_ok = [](const Poly& characteristic, const Rational& start, const Rational& step,
                       int count) {
        Rational arg = start;
        for (int k = 0; k < count; ++k) {
            Rational value = characteristic(arg);
            if (value == 0) return true;
            if (value < 0) return false;
            arg += step;
        }
        return true;
    };

    for (int n = 0; n <= p; ++n) {
        Rational hx = E / 2 + sys.lambda * (rational(n) + u);
        Rational hy = E / 2 - sys.lambda * (rational(n) + u);
        if (!chain_ok(sys.q_x, hx, -sys.lambda_x, sys.n1)) return false;           // lower in x
        if (!chain_ok(sys.q_x, hx + sys.lambda_x, sys.lambda_x, sys.n1)) return false;  // raise in x
        if (!chain_ok(sys.s_y, hy + sys.lambda_y, sys.lambda_y, sys.n2)) return false;  // raise in y
        if (!chain_ok(sys.s_y, hy, -sys.lambda_y, sys.n2)) return false;           // lower in y
    }
    return true;
}

std::vector<Unirrep> generic_unirrep_solver(const SystemSpec& sys, const Rational& E, int p_max) {
    if (p_max < 0) throw std::domain_error("generic_unirrep_solver: p_max must be >= 0");

    // Phi(E, u, 0) = 0 is a product of linear conditions on u; collect the
    // roots of every factor.
    std::set<Rational> candidates;
    for (const Rational& r : sys.q_roots)
        for (int k = 0; k < sys.n1; ++k)
            candidates.insert((r + rational(k) * sys.lambda_x - E / 2) / sys.lambda);
    for (const Rational& r : sys.s_roots)
        for (int j = 1; j <= sys.n2; ++j)
            candidates.insert((E / 2 + rational(j) * sys.lambda_y - r) / sys.lambda);

    std::vector<Unirrep> found;
    for (const Rational& u : candidates) {
        if (structure_function(sys, E, u, rational(0)) != 0)
            throw std::logic_error("generic_unirrep_solver: candidate offset does not zero the boundary");
        for (int x = 1; x <= p_max + 1; ++x) {
            Rational value = structure_function(sys, E, u, rational(x));
            if (value < 0) break;  // not a unitary window
            if (value == 0) {
                int p = x - 1;
                if (window_is_unitary(sys, E, u, p))
                    found.push_back(make_unirrep(sys, "", {}, E, u, p));
                break;
            }
        }
    }
    std::sort(found.begin(), found.end(), unirrep_less);
    return found;
}

long long degeneracy_formula(const SystemSpec& sys, long long n) {
    if (sys.kind == SystemKind::case1) {
        if (n < -sys.m1) return 0;
        if (n < 0) return 1;
        return n + 1;
    }
    const long long m1 = sys.m1;
    const long long m2 = *sys.m2;
    if (n < -(m1 + m2 + 1)) return 0;
    if (n == -(m1 + m2 + 1)) return 1;
    if (n < -m1) return 0;
    if (n <= -m2 - 1) return 1;
    if (n < 0) return 2;
    return n + 2;
}

std::map<long long, long long> brute_force_spectrum(const SystemSpec& sys, long long n_max) {
    auto factor_levels = [n_max](std::optional<int> m, long long partner_min) {
        // Bare energies of one factor, cut off so the pair sum can still reach
        // 2 n_max together with the partner's lowest level.
        std::vector<long long> levels;
        if (m) levels.push_back(-(2LL * *m + 1));
        long long cap = 2 * n_max - partner_min;
        for (long long e = 1; e <= cap; e += 2) levels.push_back(e);
        return levels;
    };

    long long y_min = sys.kind == SystemKind::case1 ? 1 : -(2LL * *sys.m2 + 1);
    long long x_min = -(2LL * sys.m1 + 1);
    std::vector<long long> ex = factor_levels(sys.m1, y_min);
    std::vector<long long> ey =
        sys.kind == SystemKind::case1 ? factor_levels(std::nullopt, x_min)
                                      : factor_levels(*sys.m2, x_min);

    std::map<long long, long long> degeneracy;
    for (long long a : ex)
        for (long long b : ey) {
            long long total = a + b;
            if (total % 2 != 0) throw std::logic_error("brute_force_spectrum: odd total energy");
            long long n = total / 2;
            if (n <= n_max) ++degeneracy[n];
        }
    return degeneracy;
}

TableRow expected_table_row(const SystemSpec& sys, long long n) {
    TableRow row;
    row.n = n;
    row.degeneracy = degeneracy_formula(sys, n);
    if (row.degeneracy == 0) return row;

    auto fill = [&row](std::initializer_list<std::pair<int, long long>> blocks) {
        for (const auto& [size, count] : blocks)
            for (long long c = 0; c < count; ++c) row.ps.push_back(size);
        row.n_unirreps = static_cast<long long>(row.ps.size());
    };

    if (sys.kind == SystemKind::case1) {
        const long long m = sys.m1;
        const long long lam = floor_div(n, m + 1);
        const long long mu = n - lam * (m + 1);
        if (n < 0) {
            fill({{0, 1}});
        } else if (lam == 0) {
            if (mu == 0)
                fill({{0, 1}});
            else
                fill({{1, 1}, {0, mu - 1}});
        } else if (mu == 0) {
            fill({{static_cast<int>(lam), 1}, {static_cast<int>(lam - 1), m}});
        } else {
            fill({{static_cast<int>(lam + 1), 1},
                  {static_cast<int>(lam), mu - 1},
                  {static_cast<int>(lam - 1), m - mu + 1}});
        }
        return row;
    }

    if (*sys.m2 != sys.m1)
        throw std::domain_error(
            "expected_table_row: closed pattern is tabulated for equal extension indices only");
    const long long m = sys.m1;
    const long long P = (m + 1) * (m + 1);
    if (n < 0) {
        // Ground level is a single multiplet; the band -m..-1 carries two.
        fill({{0, n == -(2 * m + 1) ? 1LL : 2LL}});
        return row;
    }
    const long long lam = floor_div(n, P);
    const long long mu = n - lam * P;
    const long long rho = floor_div(mu, m + 1);
    const long long sigma = mu - rho * (m + 1);
    const bool double_top = rho == m && sigma >= 1;      // two maximal windows
    const bool single_top = rho == m - 1 && sigma == 1;  // one maximal window
    if (lam == 0) {
        if (double_top)
            fill({{1, 2}, {0, mu - 2}});
        else if (single_top)
            fill({{1, 1}, {0, mu}});
        else
            fill({{0, mu + 2}});
    } else {
        if (double_top)
            fill({{static_cast<int>(lam + 1), 2},
                  {static_cast<int>(lam), mu - 2},
                  {static_cast<int>(lam - 1), P - mu}});
        else if (single_top)
            fill({{static_cast<int>(lam + 1), 1},
                  {static_cast<int>(lam), mu},
                  {static_cast<int>(lam - 1), P - mu - 1}});
        else
            fill({{static_cast<int>(lam), mu + 2}, {static_cast<int>(lam - 1), P - mu - 2}});
    }
    return row;
}

int default_p_max(const SystemSpec& sys, long long n_max) {
    if (n_max < sys.n_ground) return 0;
    long long bound;
    if (sys.kind == SystemKind::case1)
        bound = floor_div(n_max + sys.m1, sys.m1 + 1) + 1;
    else
        bound = floor_div(n_max - sys.n_ground,
                          static_cast<long long>(sys.m1 + 1) * (*sys.m2 + 1)) +
                1;
    return static_cast<int>(std::max<long long>(bound, 0));
}

SpectrumReport spectrum_report(const SystemSpec& sys, long long n_max, int p_max) {
    if (n_max < sys.n_ground)
        throw std::domain_error("spectrum_report: n_max lies below the ground level");
    if (p_max < 0) p_max = default_p_max(sys, n_max);

    std::map<long long, std::vector<int>> windows;
    for (const Unirrep& rep : enumerate_unirreps(sys, p_max))
        if (rep.n_level <= n_max) windows[rep.n_level].push_back(rep.p);

    SpectrumReport report;
    report.system = sys;
    report.n_max = n_max;
    for (long long n = sys.n_ground; n <= n_max; ++n) {
        long long expected = degeneracy_formula(sys, n);
        auto it = windows.find(n);
        std::vector<int> ps = it == windows.end() ? std::vector<int>{} : it->second;
        std::sort(ps.rbegin(), ps.rend());
        long long total = 0;
        for (int p : ps) total += p + 1;
        if (total != expected)
            throw VerificationError("spectrum_report: multiplet dimensions at level " +
                                    std::to_string(n) + " sum to " + std::to_string(total) +
                                    ", expected " + std::to_string(expected));
        if (expected == 0) continue;
        LevelEntry entry;
        entry.n = n;
        entry.energy = rational(2 * n);
        entry.degeneracy = expected;
        entry.ps = std::move(ps);
        entry.n_unirreps = static_cast<long long>(entry.ps.size());
        report.levels.push_back(std::move(entry));
    }
    return report;
}

bool verify_unirrep(const SystemSpec& sys, const Unirrep& rep) {
    if (rep.p < 0 || rep.dimension != rep.p + 1) return false;
    if (rep.energy != rational(2 * rep.n_level)) return false;
    if (structure_function(sys, rep.energy, rep.u, rational(0)) != 0) return false;
    if (structure_function(sys, rep.energy, rep.u, rational(rep.p + 1)) != 0) return false;
    if (static_cast<int>(rep.structure_values.size()) != rep.p) return false;
    for (int x = 1; x <= rep.p; ++x) {
        const Rational& stored = rep.structure_values[x - 1];
        if (stored <= 0) return false;
        if (stored != structure_function(sys, rep.energy, rep.u, rational(x))) return false;
    }
    return window_is_unitary(sys, rep.energy, rep.u, rep.p);
}

}  // namespace eoplab
