// Gauss-Legendre nodes in arbitrary precision (Newton on the Legendre
// recurrence) plus a doubling-based accuracy check used by the period and
// path integrators.
#ifndef BAKER_QUADRATURE_HPP
#define BAKER_QUADRATURE_HPP

#include <map>
#include <vector>

#include "baker/prec.hpp"

namespace baker {

template <class R>
struct GLRule {
    std::vector<R> x;  // nodes on (-1, 1), ascending
    std::vector<R> w;
};

template <class R>
const GLRule<R>& gauss_legendre(int n) {
    static std::map<int, GLRule<R>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    using std::abs;
    using std::cos;
    GLRule<R> rule;
    rule.x.resize(static_cast<std::size_t>(n));
    rule.w.resize(static_cast<std::size_t>(n));
    R pi = acos(R(-1));
    for (int i = 0; i < n; ++i) {
        R x = cos(pi * (R(i) + R(0.75)) / (R(n) + R(0.5)));
        R dp(0);
        for (int it2 = 0; it2 < 100; ++it2) {
            // Legendre P_n(x) and P_n'(x) by recurrence
            R p0(1), p1 = x;
            for (int k = 2; k <= n; ++k) {
                R p2 = ((R(2 * k - 1) * x * p1) - R(k - 1) * p0) / R(k);
                p0 = p1;
                p1 = p2;
            }
            dp = R(n) * (x * p1 - p0) / (x * x - R(1));
            R dx = p1 / dp;
            x -= dx;
            if (!(abs(dx) > abs(x) * std::numeric_limits<R>::epsilon() * 4)) break;
        }
        rule.x[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.w[static_cast<std::size_t>(n - 1 - i)] = R(2) / ((R(1) - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace baker

#endif
