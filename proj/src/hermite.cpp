#include "eoplab/hermite.hpp"

#include <stdexcept>

namespace eoplab {

namespace {

Poly recurrence(int n, int sign) {
    Poly prev(rational(1));
    if (n == 0) return prev;
    const Poly two_x = Poly::monomial(rational(2), 1);
    Poly cur = two_x;
    for (int k = 1; k < n; ++k) {
        Poly next = two_x * cur + rational(sign) * rational(2L * k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

Poly hermite(int n) {
    if (n < 0) throw std::domain_error("hermite: negative index");
    return recurrence(n, -1);
}

Poly pseudo_hermite(int m) {
    if (m < 0) throw std::domain_error("pseudo_hermite: negative index");
    return recurrence(m, +1);
}

Poly eop_y(int m, int n) {
    if (m < 1) throw std::domain_error("eop_y: index m must be >= 1");
    if (n < 0) throw std::domain_error("eop_y: negative degree");
    if (n == 0) return Poly(rational(1));
    if (n <= m) throw std::domain_error("eop_y: degrees 1..m do not occur");
    const int nu = n - m - 1;
    return -(pseudo_hermite(m) * hermite(nu + 1)) -
           rational(2L * m) * (pseudo_hermite(m - 1) * hermite(nu));
}

}  // namespace eoplab
