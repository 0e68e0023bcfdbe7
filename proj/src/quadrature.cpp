#include "eoplab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace eoplab {

namespace {

// Orthonormal-recurrence evaluation of (p_n, p_n') at z.  The polynomials
// carry an exp(z^2/2) envelope, so the pair is rescaled on the fly (Newton
// only needs the ratio); `rescales` counts factors of 1e150 taken out, which
// the weight computation has to restore.
struct RecurrenceValue {
    double p;   // p_n(z), scaled
    double pp;  // p_n'(z) = sqrt(2n) p_{n-1}(z), same scaling
    int rescales;
};

RecurrenceValue eval_orthonormal(int n, double z) {
    constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^(-1/4)
    double p1 = kPiQuarterInv;
    double p2 = 0.0;
    int rescales = 0;
    for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
        if (std::abs(p1) > 1e150) {
            p1 *= 1e-150;
            p2 *= 1e-150;
            ++rescales;
        }
    }
    return {p1, std::sqrt(2.0 * n) * p2, rescales};
}

// Number of roots of p_n strictly below lambda = number of eigenvalues of the
// (symmetric tridiagonal) Jacobi matrix below lambda, via the LDL^T sign
// count.  Diagonal entries are 0, off-diagonal squares are j/2.
int roots_below(int n, double lambda) {
    constexpr double kPivMin = 1e-280;
    int count = 0;
    double d = -lambda;
    if (std::abs(d) < kPivMin) d = -kPivMin;
    if (d < 0) ++count;
    for (int j = 2; j <= n; ++j) {
        d = -lambda - ((j - 1) / 2.0) / d;
        if (std::abs(d) < kPivMin) d = -kPivMin;
        if (d < 0) ++count;
    }
    return count;
}

// k-th smallest root (k is 1-based) bracketed by bisection; the count is
// monotone, so this cannot escape to a neighboring root the way a raw Newton
// iteration can once the envelope growth distorts its basin.
double bisect_root(int n, int k, double bound) {
    double lo = -bound;
    double hi = bound;
    for (int iter = 0; iter < 90 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (roots_below(n, mid) >= k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

QuadratureRule compute_rule(int n) {
    QuadratureRule rule;
    rule.nodes.assign(static_cast<size_t>(n), 0.0);
    rule.weights.assign(static_cast<size_t>(n), 0.0);
    const double bound = std::sqrt(2.0 * n + 1);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // i = 0 is the largest root, i.e. the n-th smallest.
        double z = bisect_root(n, n - i, bound);
        RecurrenceValue v = eval_orthonormal(n, z);
        for (int iter = 0; iter < 8; ++iter) {
            const double step = v.p / v.pp;
            z -= step;
            v = eval_orthonormal(n, z);
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        rule.nodes[static_cast<size_t>(i)] = z;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = -z;
        // True weight is 2 / (pp * 1e150^rescales)^2; where that underflows
        // the Gaussian factor really is below double range.
        double w = 2.0 / (v.pp * v.pp);
        for (int r = 0; r < v.rescales && w != 0.0; ++r) w *= 1e-300;
        rule.weights[static_cast<size_t>(i)] = w;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<size_t>(half - 1)] = 0.0;
    return rule;
}

std::mutex g_cache_mutex;
std::map<int, QuadratureRule>& cache() {
    static std::map<int, QuadratureRule> rules;
    return rules;
}

void require_integrable(const QuasiGaussian& f) {
    if (f.sigma != -1) {
        throw std::domain_error("inner_product: growing exponential weight, integral diverges");
    }
    if (!f.pre.is_zero() && !f.pre.is_polynomial() && !is_positive_even_form(f.pre.den())) {
        throw std::domain_error("inner_product: denominator not certified pole-free");
    }
}

}  // namespace

const QuadratureRule& gauss_hermite(int n) {
    if (n < 1) throw std::domain_error("gauss_hermite: need at least one node");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache().find(n);
    if (it == cache().end()) it = cache().emplace(n, compute_rule(n)).first;
    return it->second;
}

double inner_product(const QuasiGaussian& f, const QuasiGaussian& g, int nodes) {
    require_integrable(f);
    require_integrable(g);
    const QuadratureRule& rule = gauss_hermite(nodes);
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        acc += rule.weights[i] * f.pre.eval_double(x) * g.pre.eval_double(x);
    }
    return acc;
}

double inner_product(const QuasiGaussian& f, const QuasiGaussian& g) {
    constexpr int kCounts[] = {200, 400, 800, 1600, 2000};
    double prev = 0.0;
    bool have_prev = false;
    double est = 0.0;
    for (const int n : kCounts) {
        est = inner_product(f, g, n);
        if (have_prev && std::abs(est - prev) <= 1e-12 * std::max(1.0, std::abs(est))) {
            return est;
        }
        prev = est;
        have_prev = true;
    }
    return est;
}

}  // namespace eoplab
