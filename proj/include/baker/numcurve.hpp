// Numeric curve layer: branch points, sheet-tracked analytic continuation of
// y = sqrt(N(x)), piecewise paths (segments and detour arcs), and adaptive
// Gauss-Legendre integration of differential densities f(x) dx/(2y) along
// such paths.
#ifndef BAKER_NUMCURVE_HPP
#define BAKER_NUMCURVE_HPP

#include <functional>
#include <vector>

#include "baker/curve.hpp"
#include "baker/quadrature.hpp"
#include "baker/roots.hpp"
#include "baker/smallmat.hpp"

namespace baker {

struct NumError : std::runtime_error {
    enum Kind {
        RootClustering,
        NotABranchPoint,
        SheetAmbiguity,
        PathFailure,
        SymplecticCheckFailed,
        CrossCheckFailed,
        TailBoundUnreachable,
        OnThetaDivisor,
        NoCharacteristicFound,
        MultipleCharacteristicsFound,
        DirectionInconsistent,
        BadInput
    };
    Kind kind;
    NumError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

template <class P>
struct NumCurve {
    using R = typename P::Real;
    using C = typename P::Complex;

    int g = 1;
    std::vector<C> nu;     // coefficient of x^{2g+2-i} at index i
    C a{};
    int a_idx = -1;        // position of a among the sorted roots
    std::vector<C> roots;  // all 2g+2 roots, sorted by (Re, Im)
    R scale{}, min_gap{};

    C N(const C& x) const { return horner<P>(nu, x); }
    C dN(const C& x) const {
        std::vector<C> d;
        std::size_t n = nu.size() - 1;
        for (std::size_t i = 0; i < n; ++i) d.push_back(nu[i] * R(double(n - i)));
        return horner<P>(d, x);
    }
    // Taylor coefficients of N around a: N(a+s) = sum_k tay[k] s^k, by
    // repeated synthetic division by (x - a)
    std::vector<C> taylor() const {
        std::vector<C> c = nu;  // high degree first
        std::vector<C> t(c.size());
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (c.size() == 1) {
                t[k] = c[0];
                break;
            }
            std::vector<C> q(c.size() - 1);
            q[0] = c[0];
            for (std::size_t i = 1; i < q.size(); ++i) q[i] = c[i] + a * q[i - 1];
            t[k] = c.back() + a * q.back();
            c = std::move(q);
        }
        return t;
    }
};

// curve from exact rational data; a snapped to the matching root
template <class P>
NumCurve<P> make_numcurve(const CurveSpec& spec) {
    using C = typename P::Complex;
    using R = typename P::Real;
    NumCurve<P> nc;
    nc.g = spec.g;
    nc.nu.resize(spec.nu.size());
    for (std::size_t i = 0; i < spec.nu.size(); ++i) nc.nu[i] = rat_to<C>(spec.nu[i]);
    nc.roots = poly_roots<P>(nc.nu);
    using std::abs;
    R sc(0);
    for (const auto& r : nc.roots) sc = std::max(sc, R(abs(r)));
    nc.scale = std::max(sc, R(1));
    nc.min_gap = R(1e30);
    for (std::size_t i = 0; i < nc.roots.size(); ++i)
        for (std::size_t j = i + 1; j < nc.roots.size(); ++j)
            nc.min_gap = std::min(nc.min_gap, R(abs(nc.roots[i] - nc.roots[j])));
    if (nc.min_gap < nc.scale * R(1e-10))
        throw NumError(NumError::RootClustering, "branch points cluster");
    C av = rat_to<C>(spec.a);
    R best(1e30);
    for (std::size_t i = 0; i < nc.roots.size(); ++i) {
        R d = R(abs(nc.roots[i] - av));
        if (d < best) {
            best = d;
            nc.a_idx = static_cast<int>(i);
        }
    }
    if (best > nc.scale * R(1e-9))
        throw NumError(NumError::NotABranchPoint, "a is not close to any root of N");
    nc.a = nc.roots[static_cast<std::size_t>(nc.a_idx)];
    return nc;
}

// density sum_j c[j] (x-a)^{lo+j}, multiplying dx/(2y)
template <class P>
struct LaurentForm {
    using C = typename P::Complex;
    int lo = 0;
    std::vector<C> c;
    C numerator(const C& x, const C& a) const {
        C xa = x - a;
        C acc(0);
        for (std::size_t j = c.size(); j-- > 0;) acc = acc * xa + c[j];
        // acc = sum c_j xa^{j}; multiply xa^{lo}
        if (lo > 0)
            for (int k = 0; k < lo; ++k) acc *= xa;
        else
            for (int k = 0; k < -lo; ++k) acc /= xa;
        return acc;
    }
};

// path piece: straight segment or circular arc x = c + r e^{i th}
template <class P>
struct Piece {
    using R = typename P::Real;
    using C = typename P::Complex;
    bool is_arc = false;
    C z0{}, z1{};
    C center{};
    R rad{};
    R th0{}, th1{};
    C at(const R& t) const {
        if (!is_arc) return z0 + (z1 - z0) * t;
        R th = th0 + (th1 - th0) * t;
        using std::cos;
        using std::sin;
        return center + C(rad * cos(th), rad * sin(th));
    }
    C deriv(const R& t) const {
        if (!is_arc) return z1 - z0;
        R th = th0 + (th1 - th0) * t;
        using std::cos;
        using std::sin;
        return C(R(0), th1 - th0) * C(rad * cos(th), rad * sin(th));
    }
    static Piece seg(const C& a, const C& b) {
        Piece p;
        p.is_arc = false;
        p.z0 = a;
        p.z1 = b;
        return p;
    }
    static Piece arc(const C& c, const R& r, const R& t0, const R& t1) {
        Piece p;
        p.is_arc = true;
        p.center = c;
        p.rad = r;
        p.th0 = t0;
        p.th1 = t1;
        return p;
    }
};

// straight route from z0 to z1 with circular detours around obstacles closer
// than their clearance
template <class P>
void plan_into(std::vector<Piece<P>>& out, const typename P::Complex& z0,
               const typename P::Complex& z1, const std::vector<typename P::Complex>& obstacles,
               const typename P::Real& clearance, int depth = 0) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    using std::atan2;
    using std::sqrt;
    if (depth > 12) throw NumError(NumError::PathFailure, "path planning recursion too deep");
    C d = z1 - z0;
    R len = abs(d);
    if (!(len > 0)) return;
    // nearest offending obstacle
    int worst = -1;
    R worst_t{}, worst_dist(1e30), worst_rho{};
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const C& ob = obstacles[i];
        R rho = std::min(clearance,
                         std::min(R(abs(ob - z0)), R(abs(ob - z1))) * R(0.5));
        if (!(rho > 0)) continue;
        // projection parameter of ob on the segment
        C rel = (ob - z0) / d;
        R t = rel.real();
        if (t <= R(0) || t >= R(1)) continue;
        R dist = abs(ob - (z0 + d * t));
        if (dist < rho && dist < worst_dist) {
            worst = static_cast<int>(i);
            worst_t = t;
            worst_dist = dist;
            worst_rho = rho;
        }
    }
    if (worst < 0) {
        out.push_back(Piece<P>::seg(z0, z1));
        return;
    }
    const C& ob = obstacles[static_cast<std::size_t>(worst)];
    R rho = worst_rho;
    // entry/exit where the line crosses the circle |x - ob| = rho
    C foot = z0 + d * worst_t;
    R half = sqrt(rho * rho - worst_dist * worst_dist);
    C dir = d / len;
    C entry = foot - dir * half, exit = foot + dir * half;
    R th_in = atan2((entry - ob).imag(), (entry - ob).real());
    R th_out = atan2((exit - ob).imag(), (exit - ob).real());
    R twopi = R(2) * pi_v<P>();
    R dth = th_out - th_in;
    while (dth > pi_v<P>()) dth -= twopi;
    while (dth < -pi_v<P>()) dth += twopi;
    if (dth == R(0)) dth = pi_v<P>();
    plan_into<P>(out, z0, entry, obstacles, clearance, depth + 1);
    out.push_back(Piece<P>::arc(ob, rho, th_in, th_in + dth));
    plan_into<P>(out, exit, z1, obstacles, clearance, depth + 1);
}

template <class P>
std::vector<Piece<P>> plan_path(const typename P::Complex& z0, const typename P::Complex& z1,
                                const std::vector<typename P::Complex>& obstacles,
                                const typename P::Real& clearance) {
    std::vector<Piece<P>> out;
    plan_into<P>(out, z0, z1, obstacles, clearance);
    return out;
}

// analytic continuation of y = sqrt(N(x)) along moves
template <class P>
struct SheetTracker {
    using R = typename P::Real;
    using C = typename P::Complex;
    const NumCurve<P>* curve = nullptr;
    C x{}, y{};

    void move_to(const C& xn, int depth = 0) {
        using std::abs;
        using std::sqrt;
        if (depth > 40) throw NumError(NumError::SheetAmbiguity, "sheet continuation failed");
        C yn = sqrt(curve->N(xn));
        C pick = (abs(yn - y) <= abs(yn + y)) ? yn : -yn;
        // ambiguous when the step rotates y by nearly pi/2: subdivide
        if (abs(pick - y) > R(0.8) * (abs(pick) + abs(y)) || !(abs(yn) > 0)) {
            C mid = (x + xn) * R(0.5);
            move_to(mid, depth + 1);
            move_to(xn, depth + 1);
            return;
        }
        x = xn;
        y = pick;
    }
};

// Integrate the given densities along the path, starting from sheet value
// y_start at the start of the first piece. Returns one value per form;
// y_end receives the continued sheet value at the path end.
template <class P>
std::vector<typename P::Complex> integrate_forms(
    const NumCurve<P>& curve, const std::vector<Piece<P>>& path,
    const typename P::Complex& y_start, const std::vector<LaurentForm<P>>& forms,
    const typename P::Real& tol, typename P::Complex* y_end = nullptr) {
    using R = typename P::Real;
    using C = typename P::Complex;
    using std::abs;
    std::size_t nf = forms.size();
    std::vector<C> acc(nf, C(0));
    SheetTracker<P> trk;
    trk.curve = &curve;
    if (path.empty()) {
        if (y_end) *y_end = y_start;
        return acc;
    }
    trk.x = path.front().at(R(0));
    trk.y = y_start;

    // GL sum over [t0, t1] of a piece; tracker is advanced through the nodes
    auto gl_sum = [&](const Piece<P>& pc, const R& t0, const R& t1, int n,
                      SheetTracker<P>& t) -> std::vector<C> {
        const auto& rule = gauss_legendre<R>(n);
        std::vector<C> s(nf, C(0));
        R mid = (t0 + t1) / R(2), half = (t1 - t0) / R(2);
        for (int i = 0; i < n; ++i) {
            R tt = mid + half * rule.x[static_cast<std::size_t>(i)];
            C xx = pc.at(tt);
            t.move_to(xx);
            C dx = pc.deriv(tt);
            C base = dx / (R(2) * t.y) * half * rule.w[static_cast<std::size_t>(i)];
            for (std::size_t f = 0; f < nf; ++f)
                s[f] += forms[f].numerator(xx, curve.a) * base;
        }
        return s;
    };

    std::function<void(const Piece<P>&, const R&, const R&, int)> go =
        [&](const Piece<P>& pc, const R& t0, const R& t1, int depth) {
            SheetTracker<P> t1s = trk, t2s = trk;
            std::vector<C> lo = gl_sum(pc, t0, t1, 16, t1s);
            std::vector<C> hi = gl_sum(pc, t0, t1, 24, t2s);
            R err(0), mag(0);
            for (std::size_t f = 0; f < nf; ++f) {
                err = std::max(err, R(abs(hi[f] - lo[f])));
                mag = std::max(mag, R(abs(hi[f])));
            }
            if (err <= tol * (R(1) + mag) || depth > 16) {
                if (depth > 16 && err > tol * R(100) * (R(1) + mag))
                    throw NumError(NumError::PathFailure, "quadrature did not converge");
                for (std::size_t f = 0; f < nf; ++f) acc[f] += hi[f];
                trk = t2s;
                trk.move_to(pc.at(t1));
                return;
            }
            R tm = (t0 + t1) / R(2);
            go(pc, t0, tm, depth + 1);
            go(pc, tm, t1, depth + 1);
        };

    for (const auto& pc : path) {
        trk.move_to(pc.at(R(0)));
        go(pc, R(0), R(1), 0);
    }
    if (y_end) *y_end = trk.y;
    return acc;
}

}  // namespace baker

#endif
