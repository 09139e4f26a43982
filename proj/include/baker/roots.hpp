// Polynomial root finding for the branch-point layer: Durand-Kerner in double
// precision followed by Newton polish in the target precision.
#ifndef BAKER_ROOTS_HPP
#define BAKER_ROOTS_HPP

#include <algorithm>
#include <complex>
#include <vector>

#include "baker/prec.hpp"

namespace baker {

// coefficients high degree first: p(x) = c[0] x^n + ... + c[n]
inline std::complex<double> horner_cd(const std::vector<std::complex<double>>& c,
                                      std::complex<double> x) {
    std::complex<double> acc = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) acc = acc * x + c[i];
    return acc;
}

std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> c);

template <class P>
typename P::Complex horner(const std::vector<typename P::Complex>& c, typename P::Complex x) {
    typename P::Complex acc = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) acc = acc * x + c[i];
    return acc;
}

template <class P>
typename P::Complex newton_polish(const std::vector<typename P::Complex>& c,
                                  typename P::Complex x, int iters = 8) {
    std::vector<typename P::Complex> dc;
    std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i < n; ++i) dc.push_back(c[i] * typename P::Real(double(n - i)));
    using std::abs;
    for (int k = 0; k < iters; ++k) {
        auto f = horner<P>(c, x);
        auto df = horner<P>(dc, x);
        if (!(abs(df) > 0)) break;
        auto step = f / df;
        x -= step;
        if (!(abs(step) > abs(x) * real_eps<P>() * 4)) break;
    }
    return x;
}

// all roots of a polynomial given in the target precision, sorted by
// (Re, Im); seeds from double-precision Durand-Kerner
template <class P>
std::vector<typename P::Complex> poly_roots(const std::vector<typename P::Complex>& c) {
    std::vector<std::complex<double>> cd;
    cd.reserve(c.size());
    for (const auto& z : c) cd.push_back(to_cd(z));
    auto seeds = durand_kerner(cd);
    std::vector<typename P::Complex> roots;
    roots.reserve(seeds.size());
    for (auto s : seeds) roots.push_back(newton_polish<P>(c, from_cd<P>(s)));
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace baker

#endif
