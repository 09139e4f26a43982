// Riemann theta with half-integer characteristics as a centered lattice sum,
// together with directional derivative "jets": all mixed partials along a
// small set of direction vectors up to a requested order, accumulated in one
// pass over the lattice. Log-derivatives are recovered from the moment table
// by the Leibniz inversion.
#ifndef BAKER_THETA_HPP
#define BAKER_THETA_HPP

#include "baker/numcurve.hpp"

namespace baker {

// dense multi-index table: all alpha in N^m with |alpha| <= K
struct JetIndex {
    int m = 0, K = 0;
    std::vector<std::vector<int>> alphas;  // sorted by |alpha|, then lexicographic
    std::map<std::vector<int>, std::size_t> pos;

    JetIndex() = default;
    JetIndex(int m_, int K_) : m(m_), K(K_) {
        std::vector<int> a(static_cast<std::size_t>(m), 0);
        for (int total = 0; total <= K; ++total) emit(a, 0, total);
        for (std::size_t i = 0; i < alphas.size(); ++i) pos.emplace(alphas[i], i);
    }
    std::size_t size() const { return alphas.size(); }
    std::size_t at(const std::vector<int>& a) const { return pos.at(a); }

private:
    void emit(std::vector<int>& a, int i, int rem) {
        if (i == m) {
            if (rem == 0) alphas.push_back(a);
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            a[static_cast<std::size_t>(i)] = k;
            emit(a, i + 1, rem - k);
        }
        a[static_cast<std::size_t>(i)] = 0;
    }
};

template <class P>
struct ThetaContext {
    using R = typename P::Real;
    using C = typename P::Complex;
    int g = 1;
    Mat<C> tau;
    std::vector<int> d1, d2;  // characteristics, components in {0, 1} meaning k/2
    Mat<R> Y, Yinv;           // Im tau and inverse
    R lambda_min{};
};

template <class P>
ThetaContext<P> make_theta_context(const Mat<typename P::Complex>& tau,
                                   const std::vector<int>& d1, const std::vector<int>& d2) {
    using R = typename P::Real;
    ThetaContext<P> tc;
    tc.g = static_cast<int>(tau.rows());
    tc.tau = tau;
    tc.d1 = d1;
    tc.d2 = d2;
    std::size_t g = tau.rows();
    tc.Y = Mat<R>(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            tc.Y(i, j) = (tau(i, j).imag() + tau(j, i).imag()) / R(2);
    // invert the real symmetric Y through the complex helper
    Mat<typename P::Complex> yc(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) yc(i, j) = typename P::Complex(tc.Y(i, j), R(0));
    Mat<typename P::Complex> yi = yc.inverse();
    tc.Yinv = Mat<R>(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) tc.Yinv(i, j) = yi(i, j).real();
    auto ev = symmetric_eigenvalues(tc.Y);
    tc.lambda_min = ev[0];
    for (const auto& e : ev) tc.lambda_min = std::min(tc.lambda_min, e);
    if (!(tc.lambda_min > R(0)))
        throw NumError(NumError::BadInput, "Im tau is not positive definite");
    return tc;
}

// moments table: M_alpha = sum_n prod_i (2 pi i <n+d', w_i>)^{alpha_i} e^{E(n)},
// scaled by exp(-log_scale) so the largest term is O(1)
template <class P>
struct ThetaJet {
    using R = typename P::Real;
    using C = typename P::Complex;
    JetIndex idx;
    R log_scale{};
    std::vector<C> m;          // scaled moments
    C scaled_value() const { return m[0]; }
    // |theta| = exp(log_scale) |m[0]|; log has an arbitrary 2 pi i branch
    C log_value() const {
        using std::log;
        return C(log_scale, R(0)) + log(m[0]);
    }
};

template <class P>
ThetaJet<P> theta_jet(const ThetaContext<P>& tc, const std::vector<typename P::Complex>& z,
                      const std::vector<std::vector<typename P::Complex>>& dirs, int K) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    using std::exp;
    int g = tc.g;
    int nd = static_cast<int>(dirs.size());
    ThetaJet<P> out;
    out.idx = JetIndex(nd, K);
    out.m.assign(out.idx.size(), C(0));

    R pi = pi_v<P>();
    const C ipi = C(R(0), pi);
    const C i2pi = C(R(0), R(2) * pi);

    // center of the Gaussian: m* = -Y^{-1} Im z
    std::vector<R> q(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) q[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)].imag();
    std::vector<long> center(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
        R mi(0);
        for (int j = 0; j < g; ++j)
            mi -= tc.Yinv(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                  q[static_cast<std::size_t>(j)];
        mi -= R(tc.d1[static_cast<std::size_t>(i)]) / R(2);
        center[static_cast<std::size_t>(i)] = static_cast<long>(to_dbl(mi) + (to_dbl(mi) >= 0 ? 0.5 : -0.5));
    }

    // term exponent at integer point n
    auto exponent = [&](const std::vector<long>& n) {
        std::vector<C> mv(static_cast<std::size_t>(g));
        for (int i = 0; i < g; ++i)
            mv[static_cast<std::size_t>(i)] =
                C(R(double(n[static_cast<std::size_t>(i)])) +
                      R(tc.d1[static_cast<std::size_t>(i)]) / R(2),
                  R(0));
        C quad(0), lin(0);
        for (int i = 0; i < g; ++i) {
            for (int j = 0; j < g; ++j)
                quad += mv[static_cast<std::size_t>(i)] *
                        tc.tau(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                        mv[static_cast<std::size_t>(j)];
            lin += mv[static_cast<std::size_t>(i)] *
                   (z[static_cast<std::size_t>(i)] + C(R(tc.d2[static_cast<std::size_t>(i)]) / R(2), R(0)));
        }
        return ipi * quad + i2pi * lin;
    };

    std::vector<long> n0 = center;
    R E0 = exponent(n0).real();
    R tol = real_eps<P>() * R(100);
    R global_max(0);
    int quiet_shells = 0;

    std::vector<std::vector<C>> dpow(static_cast<std::size_t>(nd));
    std::vector<long> n(static_cast<std::size_t>(g));
    for (int rho = 0; rho <= 90; ++rho) {
        R shell_max(0);
        // enumerate the shell ||n - center||_inf = rho
        std::function<void(int, bool)> walk = [&](int pos, bool on_face) {
            if (pos == g) {
                if (!on_face && rho > 0) return;
                C E = exponent(n);
                C term = exp(E - C(E0, R(0)));
                // direction factors
                R smax(0);
                for (int d = 0; d < nd; ++d) {
                    C s(0);
                    for (int i = 0; i < g; ++i)
                        s += (C(R(double(n[static_cast<std::size_t>(i)])) +
                                    R(tc.d1[static_cast<std::size_t>(i)]) / R(2),
                                R(0))) *
                             dirs[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
                    s *= i2pi;
                    auto& pw = dpow[static_cast<std::size_t>(d)];
                    pw.assign(static_cast<std::size_t>(K) + 1, C(1));
                    for (int k = 1; k <= K; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * s;
                    smax = std::max(smax, R(abs(s)));
                }
                for (std::size_t ai = 0; ai < out.idx.size(); ++ai) {
                    C f = term;
                    const auto& al = out.idx.alphas[ai];
                    for (int d = 0; d < nd; ++d)
                        f *= dpow[static_cast<std::size_t>(d)][static_cast<std::size_t>(al[static_cast<std::size_t>(d)])];
                    out.m[ai] += f;
                }
                R mag = abs(term);
                R fac = smax > R(1) ? smax : R(1);
                for (int k = 0; k < K; ++k) mag *= fac;
                shell_max = std::max(shell_max, mag);
                return;
            }
            for (long dlt = -rho; dlt <= rho; ++dlt) {
                n[static_cast<std::size_t>(pos)] = center[static_cast<std::size_t>(pos)] + dlt;
                walk(pos + 1, on_face || (dlt == rho) || (dlt == -rho));
            }
        };
        walk(0, false);
        global_max = std::max(global_max, shell_max);
        if (shell_max < tol * global_max) {
            if (++quiet_shells >= 2) {
                out.log_scale = E0;
                return out;
            }
        } else {
            quiet_shells = 0;
        }
        if (rho == 90)
            throw NumError(NumError::TailBoundUnreachable, "theta lattice sum did not converge");
    }
    out.log_scale = E0;
    return out;
}

// log-derivatives from moments: L_alpha = d^alpha log theta
template <class P>
std::vector<typename P::Complex> log_jets(const ThetaJet<P>& tj) {
    using C = typename P::Complex;
    const JetIndex& ix = tj.idx;
    std::vector<C> T(ix.size()), L(ix.size(), C(0));
    for (std::size_t i = 0; i < ix.size(); ++i) T[i] = tj.m[i] / tj.m[0];
    // process by increasing |alpha|
    for (std::size_t ai = 1; ai < ix.size(); ++ai) {
        const auto& al = ix.alphas[ai];
        int j = -1;
        for (std::size_t d = 0; d < al.size(); ++d)
            if (al[d] > 0) {
                j = static_cast<int>(d);
                break;
            }
        std::vector<int> ap = al;
        ap[static_cast<std::size_t>(j)] -= 1;
        // T_al = sum_{beta <= ap} C(ap, beta) L_{beta+e_j} T_{ap-beta}
        C acc = T[ai];
        std::vector<int> beta(al.size(), 0);
        std::function<void(std::size_t, Rational)> loop = [&](std::size_t pos, Rational mult) {
            if (pos == al.size()) {
                std::vector<int> bj = beta;
                bj[static_cast<std::size_t>(j)] += 1;
                if (bj == al) return;  // the unknown term
                std::vector<int> rest(al.size());
                for (std::size_t d = 0; d < al.size(); ++d) rest[d] = ap[d] - beta[d];
                acc -= rat_to<C>(mult) * L[ix.at(bj)] * T[ix.at(rest)];
                return;
            }
            for (int b = 0; b <= ap[pos]; ++b) {
                beta[pos] = b;
                loop(pos + 1, mult * binomial(ap[pos], b));
            }
            beta[pos] = 0;
        };
        loop(0, Rational(1));
        L[ai] = acc;
    }
    return L;
}

}  // namespace baker

#endif
