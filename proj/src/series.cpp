#include "baker/series.hpp"

namespace baker {

std::vector<MultiPoly> p_polynomials(int n_max) {
    // n p_n = sum_{j=1}^{n} j T_j p_{n-j}
    std::vector<MultiPoly> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = MultiPoly(Rational(1));
    for (int n = 1; n <= n_max; ++n) {
        MultiPoly acc;
        for (int j = 1; j <= n; ++j)
            acc += MultiPoly::var("T" + std::to_string(j)) * p[static_cast<std::size_t>(n - j)] *
                   Rational(j);
        acc *= rat_of(1, n);
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

MultiPoly p_polynomial(int n) {
    if (n < 0) return MultiPoly();
    return p_polynomials(n).back();
}

MultiPoly det(const std::vector<std::vector<MultiPoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return MultiPoly(Rational(1));
    if (n == 1) return m[0][0];
    MultiPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MultiPoly t = m[0][j] * det(minor);
        if (j % 2) t *= Rational(-1);
        acc += t;
    }
    return acc;
}

MultiPoly schur_T(int g) {
    if (g < 1) throw std::invalid_argument("schur_T: g >= 1 required");
    auto p = p_polynomials(2 * g);
    auto pn = [&](int n) -> MultiPoly {
        if (n < 0) return MultiPoly();
        return p[static_cast<std::size_t>(n)];
    };
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) {
        m[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(g));
        for (int j = 1; j <= g; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                pn(g + j + 1 - 2 * i);
    }
    MultiPoly s = det(m);
    for (int i = 2; i <= 2 * g - 1; i += 2) {
        if (s.depends_on("T" + std::to_string(i)))
            throw std::logic_error("schur_T: even-indexed variable T" + std::to_string(i) +
                                   " survives");
    }
    return s;
}

MultiPoly schur_u(int g) {
    MultiPoly s = schur_T(g);
    std::map<std::string, RatFunc> bind;
    for (int i = 1; i <= 2 * g - 1; i += 2)
        bind["T" + std::to_string(i)] = RatFunc(MultiPoly::var("u" + std::to_string(i)));
    RatFunc r = substitute(s, bind);
    return r.reduced().num;
}

USeries<Rational> genus1_sigma_oracle(const Rational& l2, const Rational& l4, const Rational& l6,
                                      int cutoff) {
    return genus1_sigma_series<Rational>(l2, l4, l6, cutoff);
}

}  // namespace baker
