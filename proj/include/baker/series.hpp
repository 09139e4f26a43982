// Combinatorial series layer: the p_n generating polynomials, the Schur-type
// determinant S(T) and its odd-variable restriction S(u), truncated univariate
// power series over a generic coefficient ring, and the classical Weierstrass
// sigma expansion they feed into.
#ifndef BAKER_SERIES_HPP
#define BAKER_SERIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "baker/multipoly.hpp"

namespace baker {

// coefficient of k^n in exp(sum_j T_j k^j); zero polynomial for n < 0
MultiPoly p_polynomial(int n);
std::vector<MultiPoly> p_polynomials(int n_max);

// det(p_{g+j+1-2i}(T))_{1<=i,j<=g}; throws if any even-indexed T_i survives
MultiPoly schur_T(int g);
// S(u) = S(T)|_{T_i = u_i}: polynomial in u_1, u_3, ..., u_{2g-1}
MultiPoly schur_u(int g);

MultiPoly det(const std::vector<std::vector<MultiPoly>>& m);

// ---- truncated univariate power series over a commutative ring K ----
// K needs: default ctor (= 0), +, -, *, *= and multiplication by Rational.

template <class K>
struct USeries {
    int cutoff = 0;          // powers 0..cutoff kept
    std::vector<K> c;        // c[k] multiplies z^k

    USeries() = default;
    explicit USeries(int w) : cutoff(w), c(static_cast<std::size_t>(w) + 1) {}

    const K& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
    K& operator[](int k) { return c[static_cast<std::size_t>(k)]; }

    USeries operator+(const USeries& o) const {
        USeries r(std::min(cutoff, o.cutoff));
        for (int k = 0; k <= r.cutoff; ++k) r[k] = (*this)[k] + o[k];
        return r;
    }
    USeries operator-(const USeries& o) const {
        USeries r(std::min(cutoff, o.cutoff));
        for (int k = 0; k <= r.cutoff; ++k) r[k] = (*this)[k] - o[k];
        return r;
    }
    USeries operator*(const USeries& o) const {
        USeries r(std::min(cutoff, o.cutoff));
        for (int i = 0; i <= cutoff; ++i) {
            if (is_zero_coeff((*this)[i])) continue;
            for (int j = 0; i + j <= r.cutoff && j <= o.cutoff; ++j)
                r[i + j] = r[i + j] + (*this)[i] * o[j];
        }
        return r;
    }
    USeries scaled(const Rational& q) const {
        USeries r = *this;
        for (auto& x : r.c) x = x * K(q);
        return r;
    }

    static bool is_zero_coeff(const K& k);
};

template <>
inline bool USeries<Rational>::is_zero_coeff(const Rational& k) {
    return k == 0;
}
template <>
inline bool USeries<MultiPoly>::is_zero_coeff(const MultiPoly& k) {
    return k.is_zero();
}
template <>
inline bool USeries<RatFunc>::is_zero_coeff(const RatFunc& k) {
    return k.is_zero();
}

// exp of a series with zero constant term, via n e_n = sum_j (j s_j) e_{n-j}
template <class K>
USeries<K> series_exp(const USeries<K>& s) {
    if (!USeries<K>::is_zero_coeff(s[0]))
        throw std::invalid_argument("series_exp: nonzero constant term");
    USeries<K> e(s.cutoff);
    e[0] = K(Rational(1));
    for (int n = 1; n <= s.cutoff; ++n) {
        K acc{};
        for (int j = 1; j <= n; ++j) {
            if (USeries<K>::is_zero_coeff(s[j])) continue;
            acc = acc + s[j] * K(Rational(j)) * e[n - j];
        }
        e[n] = acc * K(rat_of(1, n));
    }
    return e;
}

// Laurent coefficients of the Weierstrass elliptic function for invariants
// (g2, g3): wp = z^-2 + sum_{n>=2} c_n z^{2n-2};
// c_2 = g2/20, c_3 = g3/28, c_n = 3/((2n+1)(n-3)) sum_{m=2}^{n-2} c_m c_{n-m}
template <class K>
std::vector<K> weierstrass_c(const K& g2, const K& g3, int n_max) {
    std::vector<K> c(static_cast<std::size_t>(n_max) + 1);
    if (n_max >= 2) c[2] = g2 * K(rat_of(1, 20));
    if (n_max >= 3) c[3] = g3 * K(rat_of(1, 28));
    for (int n = 4; n <= n_max; ++n) {
        K acc{};
        for (int m = 2; m <= n - 2; ++m) acc = acc + c[m] * c[n - m];
        c[n] = acc * K(rat_of(3, (2 * n + 1) * (n - 3)));
    }
    return c;
}

// classical sigma(z; g2, g3) = z exp(-sum_{k>=2} c_k z^{2k} / (2k(2k-1)))
template <class K>
USeries<K> weierstrass_sigma_series(const K& g2, const K& g3, int cutoff) {
    int n_max = cutoff / 2 + 1;
    auto c = weierstrass_c<K>(g2, g3, n_max);
    USeries<K> logpart(cutoff);  // log(sigma/z)
    for (int k = 2; 2 * k <= cutoff; ++k)
        logpart[2 * k] = c[k] * K(rat_of(-1, 2 * k * (2 * k - 1)));
    USeries<K> e = series_exp(logpart);
    USeries<K> sig(cutoff);
    for (int k = 0; k + 1 <= cutoff; ++k) sig[k + 1] = e[k];
    return sig;
}

// Genus-1 sigma series for Y^2 = X^3 + l2 X^2 + l4 X + l6 in the leading-
// Schur-term normalization: exp(+l2 u^2/6) * sigma_W(u; g2, g3) with
// g2 = -4(l4 - l2^2/3), g3 = -4(l6 - l2 l4/3 + 2 l2^3/27).
// The exponential prefactor's sign is pinned by the theta-route cross
// validation in the test suite.
template <class K>
USeries<K> genus1_sigma_series(const K& l2, const K& l4, const K& l6, int cutoff) {
    K third(rat_of(1, 3));
    K g2 = (l4 - l2 * l2 * third) * K(Rational(-4));
    K g3 = (l6 - l2 * l4 * third + l2 * l2 * l2 * K(rat_of(2, 27))) * K(Rational(-4));
    USeries<K> sw = weierstrass_sigma_series<K>(g2, g3, cutoff);
    USeries<K> pre(cutoff);
    if (cutoff >= 2) pre[2] = l2 * K(rat_of(1, 6));
    return series_exp(pre) * sw;
}

USeries<Rational> genus1_sigma_oracle(const Rational& l2, const Rational& l4,
                                      const Rational& l6, int cutoff);

}  // namespace baker

#endif
