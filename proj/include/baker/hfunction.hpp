// The entire-function evaluator: both routes for H, directional log-jets,
// the Baker matrix from second log-derivatives, wp from the transformed-curve
// sigma, the P-wp relation, quasi-periodicity, and the PDE residual checks.
#ifndef BAKER_HFUNCTION_HPP
#define BAKER_HFUNCTION_HPP

#include "baker/sigma.hpp"

namespace baker {

template <class P>
struct Evaluator {
    using R = typename P::Real;
    using C = typename P::Complex;
    CurveSpec spec;
    NumCurve<P> curve;
    NumModel<P> model;
    Surface<P> surf;
    PeriodsResult<P> per;
    std::vector<int> d1, d2;
    SigmaCtx<P> sigma;   // transformed-curve sigma (omega-side)
    SigmaCtx<P> hq;      // H as the same bundle: Q = kappa-hat'(mu')^{-1}, W = (2mu')^{-1}
    C log_chi{};
    R qh_sym_err{};

    std::vector<C> abel(const std::vector<std::pair<C, C>>& pts) const {
        return abel_sum<P>(surf, model.mu, pts);
    }

    // log H jets along v-directions (theta route)
    LogJet<P> h_log_jet(const std::vector<C>& v, const std::vector<std::vector<C>>& dirs,
                        int K) const {
        return sigma_log_jet<P>(hq, v, dirs, K);
    }

    // log H by the definition route: log chi + (1/2) v^T Omega v + log sigma(Dv)
    C h_log_definition(const std::vector<C>& v) const {
        using std::log;
        std::vector<C> u = model.D.apply(v);
        C quad(0);
        auto ov = model.omega.apply(v);
        for (std::size_t i = 0; i < v.size(); ++i) quad += v[i] * ov[i];
        return log_chi + quad * R(0.5) + log(sigma.eps) + sigma_log_raw<P>(sigma, u);
    }

    C h_log_theta(const std::vector<C>& v) const {
        auto j = sigma_log_jet<P>(hq, v, {}, 0);
        return j.log_value;
    }

    // relative disagreement of the two routes, branch-insensitive
    R route_residual(const std::vector<C>& v) const {
        using std::abs;
        using std::exp;
        C w = h_log_definition(v) - h_log_theta(v);
        return abs(exp(reduce_im(w)) - C(1));
    }

    // P matrix from -dd log H
    Mat<C> baker_from_h(const std::vector<C>& v) const {
        std::size_t g = v.size();
        std::vector<std::vector<C>> dirs(g, std::vector<C>(g, C(0)));
        for (std::size_t i = 0; i < g; ++i) dirs[i][i] = C(1);
        auto jet = h_log_jet(v, dirs, 2);
        if (jet.on_divisor) throw NumError(NumError::OnThetaDivisor, "H vanishes near v");
        Mat<C> Pm(g, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) {
                std::vector<int> al(g, 0);
                al[i] += 1;
                al[j] += 1;
                Pm(i, j) = -jet.L[jet.idx.at(al)];
            }
        return Pm;
    }

    // wp matrix at a point of the transformed-curve Jacobian
    Mat<C> wp(const std::vector<C>& u) const {
        std::size_t g = u.size();
        std::vector<std::vector<C>> dirs(g, std::vector<C>(g, C(0)));
        for (std::size_t i = 0; i < g; ++i) dirs[i][i] = C(1);
        auto jet = sigma_log_jet<P>(sigma, u, dirs, 2);
        if (jet.on_divisor) throw NumError(NumError::OnThetaDivisor, "sigma vanishes near u");
        Mat<C> W(g, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) {
                std::vector<int> al(g, 0);
                al[i] += 1;
                al[j] += 1;
                W(i, j) = -jet.L[jet.idx.at(al)];
            }
        return W;
    }

    // max residual of P_{..}(v) + n_{ij} - (D^T wp(Dv) D)_{ij}
    R p_wp_residual(const std::vector<C>& v) const {
        using std::abs;
        Mat<C> Pm = baker_from_h(v);
        std::vector<C> u = model.D.apply(v);
        Mat<C> Wm = wp(u);
        Mat<C> rhs = model.D.transposed() * Wm * model.D;
        R worst(0);
        for (std::size_t i = 0; i < Pm.rows(); ++i)
            for (std::size_t j = 0; j < Pm.cols(); ++j) {
                R scale = R(1) + abs(Pm(i, j)) + abs(rhs(i, j));
                worst = std::max(worst, R(abs(Pm(i, j) + model.omega(i, j) - rhs(i, j))) / scale);
            }
        return worst;
    }

    // |H(v + 2mu'm1 + 2mu''m2)/H(v) - sign * exp(E)| (relative)
    R quasi_periodicity_residual(const std::vector<C>& v, const std::vector<long>& m1,
                                 const std::vector<long>& m2) const {
        using std::abs;
        using std::exp;
        std::size_t g = v.size();
        std::vector<C> shift(g, C(0)), half(g, C(0));
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) {
                shift[i] += per.mu1(i, j) * R(2 * double(m1[j])) +
                            per.mu2(i, j) * R(2 * double(m2[j]));
                half[i] += per.mu1(i, j) * R(double(m1[j])) + per.mu2(i, j) * R(double(m2[j]));
            }
        std::vector<C> v2(g);
        for (std::size_t i = 0; i < g; ++i) v2[i] = v[i] + shift[i];
        // kappa-hat = kappa - Omega mu periods
        Mat<C> kh1 = per.kap1 - model.omega * per.mu1;
        Mat<C> kh2 = per.kap2 - model.omega * per.mu2;
        C E(0);
        long par = 0;
        for (std::size_t i = 0; i < g; ++i) {
            C row(0);
            for (std::size_t j = 0; j < g; ++j)
                row += kh1(i, j) * R(2 * double(m1[j])) + kh2(i, j) * R(2 * double(m2[j]));
            E += row * (v[i] + half[i]);
            par += d1[i] * m1[i] - d2[i] * m2[i] + m1[i] * m2[i];
        }
        C logfac = E;
        if (((par % 2) + 2) % 2 == 1) logfac += C(R(0), pi_v<P>());
        C w = h_log_theta(v2) - h_log_theta(v) - logfac;
        return abs(exp(reduce_im(w)) - C(1));
    }

    static C reduce_im(C w) {
        R twopi = R(2) * pi_v<P>();
        R im = w.imag();
        while (im > pi_v<P>()) im -= twopi;
        while (im < -pi_v<P>()) im += twopi;
        return C(w.real(), im);
    }

    // random v in the fundamental cell, resampled while H is near its divisor
    std::vector<C> sample_point(std::mt19937_64& rng) const {
        std::uniform_real_distribution<double> ud(0.05, 0.95);
        std::size_t g = static_cast<std::size_t>(curve.g);
        for (int tries = 0; tries < 64; ++tries) {
            std::vector<C> v(g, C(0));
            for (std::size_t j = 0; j < g; ++j) {
                R x1(ud(rng)), x2(ud(rng));
                for (std::size_t i = 0; i < g; ++i)
                    v[i] += per.mu1(i, j) * R(2) * x1 + per.mu2(i, j) * R(2) * x2;
            }
            auto jet = sigma_log_jet<P>(hq, v, {}, 0);
            if (!jet.on_divisor) return v;
        }
        throw NumError(NumError::OnThetaDivisor, "could not sample off the theta divisor");
    }
};

template <class P>
Evaluator<P> make_evaluator(const CurveSpec& spec, unsigned seed,
                            typename P::Complex s = typename P::Complex(0),
                            typename P::Complex t = typename P::Complex(0)) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    using std::log;
    Evaluator<P> ev;
    ev.spec = spec;
    ev.curve = make_numcurve<P>(spec);
    if (abs(s) > 0)
        ev.model = make_model<P>(ev.curve, s, t);
    else
        ev.model = make_model_default<P>(ev.curve);
    R tol = real_eps<P>() * R(1e4);
    ev.surf = make_surface<P>(ev.curve, tol);
    ev.per = compute_periods<P>(ev.surf, ev.model);
    if (ev.per.legendre_K_err > R(1e-5))
        throw NumError(NumError::SymplecticCheckFailed, "homology basis is not canonical");
    auto ch = find_riemann_constant<P>(ev.surf, ev.model, ev.per, seed);
    ev.d1 = ch.first;
    ev.d2 = ch.second;
    ev.sigma = make_sigma_ctx<P>(ev.per, ev.d1, ev.d2, ev.curve.g);
    ev.log_chi = log(ev.model.chi);

    // H bundle: Q_H = (kappa' - Omega mu')(mu')^{-1}, symmetrized
    std::size_t g = static_cast<std::size_t>(ev.curve.g);
    Mat<C> kh = ev.per.kap1 - ev.model.omega * ev.per.mu1;
    Mat<C> q = kh * ev.per.mu1.inverse();
    ev.hq.g = ev.curve.g;
    ev.hq.om1 = ev.per.mu1;
    ev.hq.Qsig = Mat<C>(g, g);
    R sym(0);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            ev.hq.Qsig(i, j) = (q(i, j) + q(j, i)) * R(0.5);
            sym = std::max(sym, R(abs(q(i, j) - q(j, i))));
        }
    ev.qh_sym_err = sym;
    ev.hq.W = (ev.per.mu1 * C(2)).inverse();
    ev.hq.th = ev.sigma.th;
    ev.hq.eps = ev.model.chi * ev.sigma.eps;
    ev.hq.schur = ev.sigma.schur;
    ev.hq.divisor_threshold = ev.sigma.divisor_threshold;
    return ev;
}

// ---- PDE residuals ----

enum class PdeKind { Kdv, KpSigma, KpSigmaTop, KpH };

// absolute residuals need the term magnitudes bounded; the bound scales with
// the available precision (quad keeps ~1e-26 relative accuracy through the
// whole stack)
template <class P>
typename P::Real pde_scale_cap() {
    return real_eps<P>() < typename P::Real(1e-20) ? typename P::Real(1e12)
                                                   : typename P::Real(1e3);
}

template <class P>
struct PdeReport {
    typename P::Real max_residual{};
    typename P::Real negative_control{};
    int points = 0;
};

// KdV on the transformed-curve side; at g = 1 the flow is stationary and the
// additive constant carries the identity
template <class P>
PdeReport<P> pde_kdv(const Evaluator<P>& ev, unsigned seed, bool perturb = false) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    int g = ev.curve.g;
    std::size_t gs = static_cast<std::size_t>(g);
    std::mt19937_64 rng(seed);
    PdeReport<P> rep;
    C lam2 = ev.model.lt[1];
    C cconst = lam2 * R(2) / R(3);
    if (perturb) cconst *= R(1.1);
    for (int pt = 0; pt < 6; ++pt) {
        std::vector<C> v = ev.sample_point(rng);
        std::vector<C> u = ev.model.D.apply(v);
        std::vector<std::vector<C>> dirs;
        std::vector<C> e1(gs, C(0));
        e1[0] = C(1);
        dirs.push_back(e1);
        if (g >= 2) {
            std::vector<C> e2(gs, C(0));
            e2[1] = C(1);
            dirs.push_back(e2);
        }
        auto jet = sigma_log_jet<P>(ev.sigma, u, dirs, 5);
        if (jet.on_divisor) continue;
        auto L = [&](int k1, int k3) {
            std::vector<int> al;
            al.push_back(k1);
            if (g >= 2) al.push_back(k3);
            return jet.L[jet.idx.at(al)];
        };
        C G = L(2, 0) * R(-2) + cconst;
        C G1 = L(3, 0) * R(-2);
        C G3 = (g >= 2) ? L(2, 1) * R(-2) : C(0);
        C G111 = L(5, 0) * R(-2);
        C res = G3 * R(4) + G * G1 * R(6) - G111;
        R scale = R(1) + abs(G * G1 * R(6)) + abs(G111);
        if (scale > pde_scale_cap<P>()) continue;  // too close to the divisor
        rep.max_residual = std::max(rep.max_residual, R(abs(res)));
        ++rep.points;
    }
    return rep;
}

// KP in the Upsilon form via wp_{1,1} (g >= 2) on the transformed-curve side
template <class P>
PdeReport<P> pde_kp_sigma(const Evaluator<P>& ev, unsigned seed, bool perturb = false) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    using std::sqrt;
    int g = ev.curve.g;
    if (g < 2) throw NumError(NumError::BadInput, "kp-sigma needs g >= 2");
    std::size_t gs = static_cast<std::size_t>(g);
    std::mt19937_64 rng(seed);
    PdeReport<P> rep;
    C c2 = sqrt(ev.model.lt[1]) * R(2);  // 2 sqrt(lambda_2), principal branch
    if (perturb) c2 *= R(1.1);
    for (int pt = 0; pt < 6; ++pt) {
        std::vector<C> v = ev.sample_point(rng);
        std::vector<C> u = ev.model.D.apply(v);
        std::vector<std::vector<C>> dirs;
        std::vector<C> e1(gs, C(0)), e2(gs, C(0));
        e1[0] = C(1);
        e2[1] = C(1);
        dirs.push_back(e1);
        dirs.push_back(e2);
        auto jet = sigma_log_jet<P>(ev.sigma, u, dirs, 6);
        if (jet.on_divisor) continue;
        auto L = [&](int k1, int k3) {
            std::vector<int> al{k1, k3};
            return jet.L[jet.idx.at(al)];
        };
        // Upsilon = 2 Lam(2,0); t3-direction is -4 e2, t2 = c2 * e1
        C U = L(2, 0) * R(2);
        C U1 = L(3, 0) * R(2);
        C U11 = L(4, 0) * R(2);
        C U13 = L(3, 1) * R(2) * R(-4);
        C U1111 = L(6, 0) * R(2);
        C U22 = U11 * c2 * c2;
        C res = U13 + U1 * U1 * R(6) + U * U11 * R(6) + U1111 - U22;
        R scale = R(1) + abs(U * U11 * R(6)) + abs(U1111) + abs(U22);
        if (scale > pde_scale_cap<P>()) continue;
        rep.max_residual = std::max(rep.max_residual, R(abs(res)));
        ++rep.points;
    }
    return rep;
}

// KP via wp_{2g-1,2g-1} with the c/d/e/f constants (g >= 3), sigma side
template <class P>
PdeReport<P> pde_kp_sigma_top(const Evaluator<P>& ev, unsigned seed, bool perturb = false) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    using std::sqrt;
    int g = ev.curve.g;
    if (g < 3) throw NumError(NumError::BadInput, "kp-sigma-top needs g >= 3");
    std::size_t gs = static_cast<std::size_t>(g);
    C ltop = ev.model.lt[static_cast<std::size_t>(2 * g + 1)];
    C lnext = ev.model.lt[static_cast<std::size_t>(2 * g)];
    C lthird = ev.model.lt[static_cast<std::size_t>(2 * g - 1)];
    C root = sqrt(ltop * R(-3));
    C cc = ltop * R(-16), dd = root * R(2), ee = lnext / root;
    C ff = lthird * R(2) / R(3) + lnext * lnext / (ltop * R(18));
    if (perturb) dd *= R(1.1);
    std::mt19937_64 rng(seed);
    PdeReport<P> rep;
    for (int pt = 0; pt < 4; ++pt) {
        std::vector<C> v = ev.sample_point(rng);
        std::vector<C> u = ev.model.D.apply(v);
        std::vector<std::vector<C>> dirs;
        std::vector<C> dir1(gs, C(0)), dir2(gs, C(0)), dir3(gs, C(0));
        dir1[gs - 1] = C(1);
        dir2[gs - 2] = dd;
        dir2[gs - 1] = ee;
        dir3[gs - 3] = cc;
        dirs.push_back(dir1);
        dirs.push_back(dir2);
        dirs.push_back(dir3);
        auto jet = sigma_log_jet<P>(ev.sigma, u, dirs, 6);
        if (jet.on_divisor) continue;
        auto L = [&](int a, int b, int c) {
            std::vector<int> al{a, b, c};
            return jet.L[jet.idx.at(al)];
        };
        C ps = L(2, 0, 0) * R(2) - ff;
        C p1 = L(3, 0, 0) * R(2);
        C p11 = L(4, 0, 0) * R(2);
        C p13 = L(3, 0, 1) * R(2);
        C p1111 = L(6, 0, 0) * R(2);
        C p22 = L(2, 2, 0) * R(2);
        C res = p13 + p1 * p1 * R(6) + ps * p11 * R(6) + p1111 - p22;
        R scale = R(1) + abs(ps * p11 * R(6)) + abs(p1111) + abs(p22);
        if (scale > pde_scale_cap<P>()) continue;
        rep.max_residual = std::max(rep.max_residual, R(abs(res)));
        ++rep.points;
    }
    return rep;
}

// KP for the Baker function P_{2,2} through H (g >= 3)
template <class P>
PdeReport<P> pde_kp_h(const Evaluator<P>& ev, unsigned seed, bool perturb = false) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    using std::sqrt;
    int g = ev.curve.g;
    if (g < 3) throw NumError(NumError::BadInput, "kp-h needs g >= 3");
    std::size_t gs = static_cast<std::size_t>(g);
    C nu0 = ev.curve.nu[0], nu2 = ev.curve.nu[1], nu4 = ev.curve.nu[2];
    C root = sqrt(nu0 * R(-3));
    C al = nu0 * R(-16), be = root * R(2), ga = nu2 / root;
    C de = nu4 * R(2) / R(3) + nu2 * nu2 / (nu0 * R(18));
    if (perturb) be *= R(1.1);
    std::mt19937_64 rng(seed);
    PdeReport<P> rep;
    // 3x3x3 grid offsets around a generic base point
    for (int pt = 0; pt < 1; ++pt) {
        std::vector<C> vb = ev.sample_point(rng);
        std::vector<C> dir1(gs, C(0)), dir2(gs, C(0)), dir3(gs, C(0));
        dir1[gs - 1] = C(1);
        dir2[gs - 2] = be;
        dir2[gs - 1] = ga;
        dir3[0] = al;
        R h = R(0.02);
        for (int i1 = -1; i1 <= 1; ++i1)
            for (int i2 = -1; i2 <= 1; ++i2)
                for (int i3 = -1; i3 <= 1; ++i3) {
                    std::vector<C> v(gs);
                    for (std::size_t k = 0; k < gs; ++k)
                        v[k] = vb[k] + dir1[k] * (h * R(i1)) + dir2[k] * (h * R(i2)) +
                               dir3[k] * (h * R(i3));
                    auto jet = ev.h_log_jet(v, {dir1, dir2, dir3}, 6);
                    if (jet.on_divisor) continue;
                    auto L = [&](int a, int b, int c) {
                        std::vector<int> alx{a, b, c};
                        return jet.L[jet.idx.at(alx)];
                    };
                    C ps = L(2, 0, 0) * R(2) - de;
                    C p1 = L(3, 0, 0) * R(2);
                    C p11 = L(4, 0, 0) * R(2);
                    C p13 = L(3, 0, 1) * R(2);
                    C p1111 = L(6, 0, 0) * R(2);
                    C p22 = L(2, 2, 0) * R(2);
                    C res = p13 + p1 * p1 * R(6) + ps * p11 * R(6) + p1111 - p22;
                    R scale = R(1) + abs(ps * p11 * R(6)) + abs(p1111) + abs(p22);
                    if (scale > pde_scale_cap<P>()) continue;
                    rep.max_residual = std::max(rep.max_residual, R(abs(res)));
                    ++rep.points;
                }
    }
    return rep;
}

}  // namespace baker

#endif
