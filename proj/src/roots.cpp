#include "baker/roots.hpp"

namespace baker {

std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> c) {
    using C = std::complex<double>;
    if (c.size() < 2) return {};
    // normalize to monic
    C lead = c[0];
    for (auto& z : c) z /= lead;
    std::size_t n = c.size() - 1;
    // initial guesses on a circle of radius from the coefficient bound
    double r = 0.0;
    for (std::size_t i = 1; i <= n; ++i) r = std::max(r, std::pow(std::abs(c[i]), 1.0 / double(i)));
    r = 1.2 * std::max(r, 0.5);
    std::vector<C> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        double th = 2.0 * 3.141592653589793 * (double(i) + 0.25) / double(n);
        z[i] = r * C(std::cos(th), std::sin(th));
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            C num = horner_cd(c, z[i]);
            C den(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            if (den == C(0.0)) den = C(1e-30, 0);
            C step = num / den;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14 * std::max(1.0, r)) break;
    }
    return z;
}

}  // namespace baker
