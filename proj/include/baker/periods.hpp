// Period layer. Elementary cycles gamma_k encircle consecutive sorted branch
// points [r_k, r_{k+1}]; a-cycles are gamma_{2i-1} and b-cycles are
// sum_{k=i..g} gamma_{2k}, which makes the chain intersections canonical up
// to one global orientation, fixed a posteriori by Im(tau) > 0 and verified
// by the Legendre-type relation. Holomorphic integrands contract onto the
// segment (cosine substitution removes the endpoint singularities); second-
// kind integrands with a pole at the marked branch point are integrated on a
// stadium contour around the segment instead.
#ifndef BAKER_PERIODS_HPP
#define BAKER_PERIODS_HPP

#include "baker/numcurve.hpp"
#include "baker/omega.hpp"

namespace baker {

// cached exact data reused by every numeric model of a given genus
const OmegaMatrixX& omega_symbolic(int g);
const std::vector<MultiPoly>& kappa_symbolic(int g);

template <class P>
struct NumModel {
    using R = typename P::Real;
    using C = typename P::Complex;
    NumCurve<P> curve;
    C s{}, t{};
    std::vector<C> lt;    // lambda-tilde_{2i}, i = 0..2g+1
    Mat<C> D;             // g x g
    C chi{};
    Mat<C> omega;         // n_{ij} numeric
    // form catalogs as Laurent densities around a
    std::vector<LaurentForm<P>> mu, zeta_omega, zeta_eta, kappa;
};

// admissible numeric scaling: either the given pair (validated) or the
// default s = 1, t = 1/sqrt(N'(a)) (principal branch)
template <class P>
NumModel<P> make_model(const NumCurve<P>& nc, typename P::Complex s, typename P::Complex t);

template <class P>
NumModel<P> make_model_default(const NumCurve<P>& nc) {
    using C = typename P::Complex;
    using std::sqrt;
    C np = nc.dN(nc.a);
    return make_model<P>(nc, C(1), C(1) / sqrt(np));
}

template <class P>
struct Surface {
    using R = typename P::Real;
    using C = typename P::Complex;
    NumCurve<P> curve;
    C anchor_x{}, anchor_y{};
    // per elementary segment k = 1..2g+1 (index k-1): offset point, its sheet
    // value, sheet value at the segment midpoint, stadium radius
    std::vector<C> p0, y_p0, y_mid;
    std::vector<R> rho;
    R tol{};
};

template <class P>
Surface<P> make_surface(const NumCurve<P>& nc, typename P::Real tol);

// loop integrals over gamma_k for a batch of forms; pole_at_a flags per form
template <class P>
std::vector<std::vector<typename P::Complex>> elementary_cycles(
    const Surface<P>& S, const std::vector<LaurentForm<P>>& forms,
    const std::vector<bool>& pole_at_a);

template <class P>
struct PeriodsResult {
    using R = typename P::Real;
    using C = typename P::Complex;
    Mat<C> mu1, mu2;          // mu', mu''
    Mat<C> om1, om2;          // omega', omega''
    Mat<C> eta1, eta2;        // eta', eta''
    Mat<C> kap1, kap2;        // kappa', kappa'' (from the linear relation)
    Mat<C> kap1_direct, kap2_direct;  // from direct integration of kappa_i
    Mat<C> tau;
    bool flipped_b = false;   // b-cycles negated to make Im tau > 0
    R tau_sym_err{}, tau_im_min{};
    R legendre_K_err{}, legendre_KK_err{}, d_transfer_err{}, kappa_cross_err{};
};

// assemble all period matrices for the model over the surface's homology
template <class P>
PeriodsResult<P> compute_periods(const Surface<P>& S, const NumModel<P>& m);

// ---- implementation ----

template <class P>
NumModel<P> make_model(const NumCurve<P>& nc, typename P::Complex s, typename P::Complex t) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    using std::pow;
    NumModel<P> m;
    m.curve = nc;
    m.s = s;
    m.t = t;
    int g = nc.g;
    C np = nc.dN(nc.a);
    // admissibility s^{2g+1}/t^2 = N'(a)
    C sp(1);
    for (int i = 0; i < 2 * g + 1; ++i) sp *= s;
    if (!(abs(sp / (t * t) - np) <= R(1e-8) * abs(np)))
        throw NumError(NumError::BadInput, "scaling pair violates s^{2g+1}/t^2 = N'(a)");
    auto tay = nc.taylor();
    m.lt.resize(static_cast<std::size_t>(2 * g + 2));
    C spow(1);
    for (int i = 0; i <= 2 * g + 1; ++i) {
        m.lt[static_cast<std::size_t>(i)] = spow * tay[static_cast<std::size_t>(i + 1)] / np;
        spow *= s;
    }
    // D matrix
    m.D = Mat<C>(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) {
        C pref(1);
        for (int k = 0; k < g + 1 - i; ++k) pref *= s;
        pref /= t;
        for (int j = 1; j <= i; ++j) {
            C b = rat_to<C>(binomial(i - 1, j - 1));
            C apow(1);
            for (int k = 0; k < i - j; ++k) apow *= -nc.a;
            m.D(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                pref * b * apow;
        }
    }
    // chi
    bool odd = ((g * (g + 1) / 2) % 2) != 0;
    int se = odd ? (g * g - 3 * g - 2) / 4 : g * (g + 1) / 4;
    C chi(1);
    for (int k = 0; k < std::abs(se); ++k) chi *= s;
    if (se < 0) chi = C(1) / chi;
    if (odd) chi *= t;
    m.chi = chi;

    // numeric Omega from the cached exact matrix
    std::map<std::string, C> env;
    env["a"] = nc.a;
    for (int i = 0; i <= 2 * g + 2; ++i)
        env["nu" + std::to_string(2 * i)] = nc.nu[static_cast<std::size_t>(i)];
    const OmegaMatrixX& ox = omega_symbolic(g);
    m.omega = Mat<C>(static_cast<std::size_t>(g), static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            m.omega(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                ox.n[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(env);

    // mu_i = x^{i-1} dx/(2y): expand x^{i-1} = sum_j binom(i-1,j) a^{i-1-j} (x-a)^j
    for (int i = 1; i <= g; ++i) {
        LaurentForm<P> f;
        f.lo = 0;
        f.c.resize(static_cast<std::size_t>(i));
        for (int j = 0; j <= i - 1; ++j) {
            C apow(1);
            for (int k = 0; k < i - 1 - j; ++k) apow *= nc.a;
            f.c[static_cast<std::size_t>(j)] = rat_to<C>(binomial(i - 1, j)) * apow;
        }
        m.mu.push_back(f);
    }
    // zeta^*(omega_i) = t^{-1} s^{g+1-i} (x-a)^{i-1} dx/(2y)
    for (int i = 1; i <= g; ++i) {
        LaurentForm<P> f;
        f.lo = i - 1;
        C pref(1);
        for (int k = 0; k < g + 1 - i; ++k) pref *= s;
        pref /= t;
        f.c = {pref};
        m.zeta_omega.push_back(f);
    }
    // zeta^*(eta_i) = (s^{g+i}/t) sum_{k=g-i+1}^{g+i-1} (k+i-g)
    //                 tay_{g+i-k}/N'(a) (x-a)^{g-k-1} dx/(2y)
    for (int i = 1; i <= g; ++i) {
        LaurentForm<P> f;
        f.lo = -i;  // lowest power: k = g+i-1 -> g-k-1 = -i
        f.c.assign(static_cast<std::size_t>(2 * i - 1), C(0));
        C pref(1);
        for (int k = 0; k < g + i; ++k) pref *= s;
        pref /= t;
        for (int k = g - i + 1; k <= g + i - 1; ++k) {
            int p = g - k - 1;  // power of (x-a) in [-i, i-2]
            f.c[static_cast<std::size_t>(p + i)] =
                pref * R(double(k + i - g)) * tay_at(nc, g + i - k) / np;
        }
        m.zeta_eta.push_back(f);
    }
    // kappa_i from the cached exact numerators over (x-a)^g
    const auto& kx = kappa_symbolic(g);
    for (int i = 1; i <= g; ++i) {
        const MultiPoly& rp = kx[static_cast<std::size_t>(i - 1)];
        // evaluate the coefficients of x^l, then shift the polynomial to the
        // (x-a) basis numerically
        long dx = std::max<long>(rp.degree_in("x"), 0);
        std::vector<C> cx(static_cast<std::size_t>(dx) + 1, C(0));
        for (long l = 0; l <= dx; ++l)
            cx[static_cast<std::size_t>(l)] = rp.coeff_of("x", static_cast<int>(l)).eval(env);
        // shift: p(x) = sum cx_l x^l -> sum cs_k (x-a)^k via Horner around a
        std::vector<C> high(cx.rbegin(), cx.rend());  // high degree first
        std::vector<C> cs(high.size());
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (high.size() == 1) {
                cs[k] = high[0];
                break;
            }
            std::vector<C> q(high.size() - 1);
            q[0] = high[0];
            for (std::size_t ii = 1; ii < q.size(); ++ii) q[ii] = high[ii] + nc.a * q[ii - 1];
            cs[k] = high.back() + nc.a * q.back();
            high = std::move(q);
        }
        LaurentForm<P> f;
        f.lo = -g;
        f.c.assign(cs.begin(), cs.end());
        m.kappa.push_back(f);
    }
    return m;
}

template <class P>
typename P::Complex tay_at(const NumCurve<P>& nc, int m) {
    auto t = nc.taylor();
    return t[static_cast<std::size_t>(m)];
}

template <class P>
Surface<P> make_surface(const NumCurve<P>& nc, typename P::Real tol) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    Surface<P> S;
    S.curve = nc;
    S.tol = tol;
    int m = 2 * nc.g + 1;  // number of elementary segments
    // anchor high above the root cloud
    C cen(0);
    for (const auto& r : nc.roots) cen += r;
    cen /= R(double(nc.roots.size()));
    R spread(0);
    for (const auto& r : nc.roots) spread = std::max(spread, R(abs(r - cen)));
    S.anchor_x = cen + C(R(0.137), R(3) * spread + R(2));
    using std::sqrt;
    S.anchor_y = sqrt(nc.N(S.anchor_x));

    S.p0.resize(static_cast<std::size_t>(m));
    S.y_p0.resize(static_cast<std::size_t>(m));
    S.y_mid.resize(static_cast<std::size_t>(m));
    S.rho.resize(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        C b0 = nc.roots[static_cast<std::size_t>(k - 1)], b1 = nc.roots[static_cast<std::size_t>(k)];
        C mid = (b0 + b1) * R(0.5), h = (b1 - b0) * R(0.5);
        // clearance: distance from the other roots to the segment
        R cl(1e30);
        for (std::size_t j = 0; j < nc.roots.size(); ++j) {
            if (static_cast<int>(j) == k - 1 || static_cast<int>(j) == k) continue;
            C rel = (nc.roots[j] - b0) / (b1 - b0);
            R t = std::min(std::max(rel.real(), R(0)), R(1));
            cl = std::min(cl, R(abs(nc.roots[j] - (b0 + (b1 - b0) * t))));
        }
        R rho = std::min(R(0.35) * cl, R(0.45) * abs(h));
        S.rho[static_cast<std::size_t>(k - 1)] = rho;
        C nhat = C(R(0), R(1)) * (h / abs(h));
        C p0 = mid + nhat * rho;
        S.p0[static_cast<std::size_t>(k - 1)] = p0;
        // continue y from the anchor to p0, then to the midpoint
        std::vector<C> obstacles = nc.roots;
        auto path = plan_path<P>(S.anchor_x, p0, obstacles, R(0.6) * rho);
        C ye{};
        integrate_forms<P>(nc, path, S.anchor_y, {}, tol, &ye);
        S.y_p0[static_cast<std::size_t>(k - 1)] = ye;
        SheetTracker<P> trk;
        trk.curve = &S.curve;
        trk.x = p0;
        trk.y = ye;
        trk.move_to(mid);
        S.y_mid[static_cast<std::size_t>(k - 1)] = trk.y;
    }
    return S;
}

// cosine-substitution integral over segment k for pole-free densities:
// returns the loop value 2 * int_{b0}^{b1} f dx/(2y)
template <class P>
std::vector<typename P::Complex> cycle_cosine(const Surface<P>& S, int k,
                                              const std::vector<LaurentForm<P>>& forms) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    using std::cos;
    using std::sqrt;
    const auto& nc = S.curve;
    C b0 = nc.roots[static_cast<std::size_t>(k - 1)], b1 = nc.roots[static_cast<std::size_t>(k)];
    C mid = (b0 + b1) * R(0.5), h = (b1 - b0) * R(0.5);
    // w(theta)^2 = -Q(x), Q = N/((x-b0)(x-b1)); sign matched to y_mid
    auto wsq = [&](const C& x) {
        C q = nc.N(x) / ((x - b0) * (x - b1));
        return -q;
    };
    C w_mid = sqrt(wsq(mid));
    C s_w = S.y_mid[static_cast<std::size_t>(k - 1)] / (h * w_mid);
    s_w = (abs(s_w - C(1)) > abs(s_w + C(1))) ? C(-1) : C(1);
    R pi = pi_v<P>();
    std::size_t nf = forms.size();
    std::vector<C> prev(nf, C(0));
    for (int n = 48; n <= 3072; n *= 2) {
        const auto& rule = gauss_legendre<R>(n);
        std::vector<C> acc(nf, C(0));
        // continue w from the midpoint outward in both directions so each
        // sweep starts from the trusted value
        std::vector<R> th(static_cast<std::size_t>(n));
        std::vector<C> wv(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            th[static_cast<std::size_t>(i)] = (rule.x[static_cast<std::size_t>(i)] + R(1)) * pi / R(2);
        // ascending theta; find split point near pi/2
        C wcur = w_mid;
        R thcur = pi / R(2);
        for (int i = 0; i < n; ++i) {
            // walk to node i from current; nodes are ascending, but start at
            // pi/2: handle left part by a second pass
            (void)i;
        }
        // left of pi/2, descending
        wcur = w_mid;
        thcur = pi / R(2);
        for (int i = n - 1; i >= 0; --i) {
            if (th[static_cast<std::size_t>(i)] > pi / R(2)) continue;
            C xw = mid + h * cos(th[static_cast<std::size_t>(i)]);
            C wn = sqrt(wsq(xw));
            if (abs(wn - wcur) > abs(wn + wcur)) wn = -wn;
            wv[static_cast<std::size_t>(i)] = wn;
            wcur = wn;
            thcur = th[static_cast<std::size_t>(i)];
        }
        // right of pi/2, ascending
        wcur = w_mid;
        thcur = pi / R(2);
        for (int i = 0; i < n; ++i) {
            if (th[static_cast<std::size_t>(i)] <= pi / R(2)) continue;
            C xw = mid + h * cos(th[static_cast<std::size_t>(i)]);
            C wn = sqrt(wsq(xw));
            if (abs(wn - wcur) > abs(wn + wcur)) wn = -wn;
            wv[static_cast<std::size_t>(i)] = wn;
            wcur = wn;
            thcur = th[static_cast<std::size_t>(i)];
        }
        (void)thcur;
        for (int i = 0; i < n; ++i) {
            C x = mid + h * cos(th[static_cast<std::size_t>(i)]);
            C base = (pi / R(2)) * rule.w[static_cast<std::size_t>(i)] /
                     (R(2) * s_w * wv[static_cast<std::size_t>(i)]);
            for (std::size_t f = 0; f < nf; ++f) acc[f] += forms[f].numerator(x, nc.a) * base;
        }
        R err(0), mag(0);
        for (std::size_t f = 0; f < nf; ++f) {
            err = std::max(err, R(abs(acc[f] - prev[f])));
            mag = std::max(mag, R(abs(acc[f])));
        }
        prev = acc;
        if (n > 48 && err <= S.tol * (R(1) + mag)) break;
    }
    for (auto& v : prev) v *= R(2);  // loop = twice the segment integral
    return prev;
}

// stadium-contour loop around segment k (used when a form has a pole at a on
// that segment); counterclockwise-equivalent orientation matching cycle_cosine
template <class P>
std::vector<typename P::Complex> cycle_stadium(const Surface<P>& S, int k,
                                               const std::vector<LaurentForm<P>>& forms) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    using std::atan2;
    const auto& nc = S.curve;
    C b0 = nc.roots[static_cast<std::size_t>(k - 1)], b1 = nc.roots[static_cast<std::size_t>(k)];
    R rho = S.rho[static_cast<std::size_t>(k - 1)];
    C d = b1 - b0;
    C dh = d / abs(d);
    C nh = C(R(0), R(1)) * dh;
    R a0 = atan2(nh.imag(), nh.real());
    R pi = pi_v<P>();
    std::vector<Piece<P>> loop;
    loop.push_back(Piece<P>::seg(S.p0[static_cast<std::size_t>(k - 1)], b1 + nh * rho));
    loop.push_back(Piece<P>::arc(b1, rho, a0, a0 - pi));
    loop.push_back(Piece<P>::seg(b1 - nh * rho, b0 - nh * rho));
    loop.push_back(Piece<P>::arc(b0, rho, a0 - pi, a0 - R(2) * pi));
    loop.push_back(Piece<P>::seg(b0 + nh * rho, S.p0[static_cast<std::size_t>(k - 1)]));
    C y_end{};
    auto vals = integrate_forms<P>(nc, loop, S.y_p0[static_cast<std::size_t>(k - 1)], forms,
                                   S.tol, &y_end);
    if (abs(y_end - S.y_p0[static_cast<std::size_t>(k - 1)]) >
        R(1e-5) * (R(1) + abs(y_end)))
        throw NumError(NumError::PathFailure, "stadium loop did not close on the sheet");
    return vals;
}

template <class P>
std::vector<std::vector<typename P::Complex>> elementary_cycles(
    const Surface<P>& S, const std::vector<LaurentForm<P>>& forms,
    const std::vector<bool>& pole_at_a) {
    using C = typename P::Complex;
    const auto& nc = S.curve;
    int m = 2 * nc.g + 1;
    std::vector<std::vector<C>> out(static_cast<std::size_t>(m));
    // split the batch into pole-free and pole-carrying forms per segment
    for (int k = 1; k <= m; ++k) {
        bool touches_a = (nc.a_idx == k - 1) || (nc.a_idx == k);
        std::vector<LaurentForm<P>> cosf, stadf;
        std::vector<std::size_t> cosi, stadi;
        for (std::size_t f = 0; f < forms.size(); ++f) {
            if (touches_a && pole_at_a[f]) {
                stadf.push_back(forms[f]);
                stadi.push_back(f);
            } else {
                cosf.push_back(forms[f]);
                cosi.push_back(f);
            }
        }
        std::vector<C> vals(forms.size(), C(0));
        if (!cosf.empty()) {
            auto v = cycle_cosine<P>(S, k, cosf);
            for (std::size_t i = 0; i < cosi.size(); ++i) vals[cosi[i]] = v[i];
        }
        if (!stadf.empty()) {
            auto v = cycle_stadium<P>(S, k, stadf);
            for (std::size_t i = 0; i < stadi.size(); ++i) vals[stadi[i]] = v[i];
        }
        out[static_cast<std::size_t>(k - 1)] = vals;
    }
    return out;
}

template <class P>
PeriodsResult<P> compute_periods(const Surface<P>& S, const NumModel<P>& m) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    int g = m.curve.g;
    std::size_t gs = static_cast<std::size_t>(g);
    // batch: mu (g), zeta_omega (g), zeta_eta (g), kappa (g)
    std::vector<LaurentForm<P>> forms;
    std::vector<bool> pole;
    for (const auto& f : m.mu) {
        forms.push_back(f);
        pole.push_back(false);
    }
    for (const auto& f : m.zeta_omega) {
        forms.push_back(f);
        pole.push_back(f.lo < 0);
    }
    for (const auto& f : m.zeta_eta) {
        forms.push_back(f);
        pole.push_back(f.lo < 0);
    }
    for (const auto& f : m.kappa) {
        forms.push_back(f);
        pole.push_back(f.lo < 0);
    }
    auto elem = elementary_cycles<P>(S, forms, pole);

    auto cyc_a = [&](int j, std::size_t fidx) {  // loop over a_j = gamma_{2j-1}
        return elem[static_cast<std::size_t>(2 * j - 2)][fidx];
    };
    auto cyc_b = [&](int j, std::size_t fidx) {  // b_j = sum_{k=j..g} gamma_{2k}
        C acc(0);
        for (int k = j; k <= g; ++k) acc += elem[static_cast<std::size_t>(2 * k - 1)][fidx];
        return acc;
    };

    PeriodsResult<P> out;
    out.mu1 = Mat<C>(gs, gs);
    out.mu2 = Mat<C>(gs, gs);
    out.om1 = Mat<C>(gs, gs);
    out.om2 = Mat<C>(gs, gs);
    out.eta1 = Mat<C>(gs, gs);
    out.eta2 = Mat<C>(gs, gs);
    out.kap1_direct = Mat<C>(gs, gs);
    out.kap2_direct = Mat<C>(gs, gs);
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j) {
            std::size_t si = static_cast<std::size_t>(i - 1), sj = static_cast<std::size_t>(j - 1);
            out.mu1(si, sj) = cyc_a(j, si) / R(2);
            out.mu2(si, sj) = cyc_b(j, si) / R(2);
            out.om1(si, sj) = cyc_a(j, gs + si) / R(2);
            out.om2(si, sj) = cyc_b(j, gs + si) / R(2);
            out.eta1(si, sj) = -cyc_a(j, 2 * gs + si) / R(2);
            out.eta2(si, sj) = -cyc_b(j, 2 * gs + si) / R(2);
            out.kap1_direct(si, sj) = -cyc_a(j, 3 * gs + si) / R(2);
            out.kap2_direct(si, sj) = -cyc_b(j, 3 * gs + si) / R(2);
        }

    // orientation: Im tau positive definite, else negate the b-cycles
    auto im_min = [&](const Mat<C>& tau) {
        Mat<R> im(gs, gs);
        for (std::size_t i = 0; i < gs; ++i)
            for (std::size_t j = 0; j < gs; ++j)
                im(i, j) = (tau(i, j).imag() + tau(j, i).imag()) / R(2);
        auto ev = symmetric_eigenvalues(im);
        R mn = ev[0];
        for (const auto& e : ev) mn = std::min(mn, e);
        return mn;
    };
    Mat<C> tau = out.mu1.inverse() * out.mu2;
    if (im_min(tau) < R(0)) {
        out.flipped_b = true;
        out.mu2 = out.mu2 * C(-1);
        out.om2 = out.om2 * C(-1);
        out.eta2 = out.eta2 * C(-1);
        out.kap2_direct = out.kap2_direct * C(-1);
        tau = out.mu1.inverse() * out.mu2;
    }
    out.tau = tau;
    out.tau_im_min = im_min(tau);
    R sym(0);
    for (std::size_t i = 0; i < gs; ++i)
        for (std::size_t j = 0; j < gs; ++j)
            sym = std::max(sym, R(abs(tau(i, j) - tau(j, i))));
    out.tau_sym_err = sym;

    // kappa periods by the linear relation kap' = D^T eta' + 2 Omega mu'
    Mat<C> Dt = m.D.transposed();
    out.kap1 = Dt * out.eta1 + (m.omega * out.mu1) * C(2);
    out.kap2 = Dt * out.eta2 + (m.omega * out.mu2) * C(2);
    R cross(0);
    for (std::size_t i = 0; i < gs; ++i)
        for (std::size_t j = 0; j < gs; ++j) {
            R d1 = abs(out.kap1(i, j) - out.kap1_direct(i, j));
            R d2 = abs(out.kap2(i, j) - out.kap2_direct(i, j));
            R s1 = R(1) + abs(out.kap1(i, j)), s2 = R(1) + abs(out.kap2(i, j));
            cross = std::max(cross, std::max(d1 / s1, d2 / s2));
        }
    out.kappa_cross_err = cross;

    // D mu' = omega' transfer
    Mat<C> dm1 = m.D * out.mu1 - out.om1;
    Mat<C> dm2 = m.D * out.mu2 - out.om2;
    R dt(0);
    for (std::size_t i = 0; i < gs; ++i)
        for (std::size_t j = 0; j < gs; ++j)
            dt = std::max(dt, std::max(R(abs(dm1(i, j))), R(abs(dm2(i, j)))));
    out.d_transfer_err = dt;

    // Legendre-type relation for K = [[om', om''], [eta', eta'']] and the
    // kappa analogue
    auto legendre = [&](const Mat<C>& w1, const Mat<C>& w2, const Mat<C>& e1,
                        const Mat<C>& e2) {
        Mat<C> K(2 * gs, 2 * gs);
        for (std::size_t i = 0; i < gs; ++i)
            for (std::size_t j = 0; j < gs; ++j) {
                K(i, j) = w1(i, j);
                K(i, gs + j) = w2(i, j);
                K(gs + i, j) = e1(i, j);
                K(gs + i, gs + j) = e2(i, j);
            }
        Mat<C> J(2 * gs, 2 * gs);
        for (std::size_t i = 0; i < gs; ++i) {
            J(i, gs + i) = C(1);
            J(gs + i, i) = C(-1);
        }
        Mat<C> lhs = K.transposed() * J * K;
        C targ = C(R(0), -pi_v<P>() / R(2));
        Mat<C> rhs = J * targ;
        R err(0);
        for (std::size_t i = 0; i < 2 * gs; ++i)
            for (std::size_t j = 0; j < 2 * gs; ++j)
                err = std::max(err, R(abs(lhs(i, j) - rhs(i, j))));
        return err;
    };
    out.legendre_K_err = legendre(out.om1, out.om2, out.eta1, out.eta2);
    out.legendre_KK_err = legendre(out.mu1, out.mu2, out.kap1, out.kap2);
    return out;
}

}  // namespace baker

#endif
