#include "baker/curve.hpp"

#include <algorithm>

namespace baker {

namespace {
MultiPoly mono_x(int k) { return MultiPoly::var("x", k); }
}  // namespace

MultiPoly univar_rem(const MultiPoly& p, const MultiPoly& q, const std::string& v) {
    long dq = q.degree_in(v);
    if (q.is_zero()) throw std::invalid_argument("univar_rem: zero divisor");
    MultiPoly r = p;
    MultiPoly qlead = q.coeff_of(v, static_cast<int>(dq));
    if (!qlead.is_constant()) throw std::invalid_argument("univar_rem: non-constant lead");
    Rational ql = qlead.constant_value();
    while (!r.is_zero() && r.degree_in(v) >= dq) {
        long dr = r.degree_in(v);
        MultiPoly rl = r.coeff_of(v, static_cast<int>(dr));
        if (!rl.is_constant()) throw std::invalid_argument("univar_rem: non-constant coeff");
        MultiPoly t = MultiPoly(rl.constant_value() / ql) * MultiPoly::var(v, static_cast<int>(dr - dq));
        r -= t * q;
    }
    return r;
}

MultiPoly univar_gcd(MultiPoly p, MultiPoly q, const std::string& v) {
    while (!q.is_zero()) {
        MultiPoly r = univar_rem(p, q, v);
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

CurveSpec validate_curve(int g, const std::vector<Rational>& nu, const Rational& a) {
    if (g < 1) throw CurveError(CurveError::BadInput, "genus must be >= 1");
    if (static_cast<int>(nu.size()) != 2 * g + 3)
        throw CurveError(CurveError::BadInput,
                         "expected " + std::to_string(2 * g + 3) + " nu coefficients, got " +
                             std::to_string(nu.size()));
    if (nu[0] == 0) throw CurveError(CurveError::Nu0Zero, "nu0 must be nonzero");
    // N(x) and N'(x)
    MultiPoly N, Np;
    int deg = 2 * g + 2;
    for (int i = 0; i <= deg; ++i) N += MultiPoly(nu[static_cast<std::size_t>(i)]) * mono_x(deg - i);
    Np = N.derivative("x");
    MultiPoly gcd = univar_gcd(N, Np, "x");
    if (gcd.degree_in("x") > 0)
        throw CurveError(CurveError::MultipleRoots, "N has multiple roots");
    // N(a) = 0
    Rational na(0), apow(1);
    for (int i = deg; i >= 0; --i) {
        na += nu[static_cast<std::size_t>(deg - i)] * rat_pow(a, i);
    }
    if (na != 0)
        throw CurveError(CurveError::NotABranchPoint, "N(a) != 0 for a = " + rat_str(a));
    (void)apow;
    CurveSpec spec;
    spec.g = g;
    spec.nu = nu;
    spec.a = a;
    return spec;
}

CurveCtx CurveCtx::symbolic(int g) {
    // a and nu_0..nu_{4g+2} are free; nu_{4g+4} is eliminated through the
    // branch-point relation N(a) = 0 (it enters that relation linearly), so
    // every downstream identity is an honest free-ring identity
    CurveCtx c;
    c.g = g;
    c.is_symbolic = true;
    c.a = MultiPoly::var("a");
    c.nu.resize(static_cast<std::size_t>(2 * g + 3));
    for (int i = 0; i <= 2 * g + 1; ++i)
        c.nu[static_cast<std::size_t>(i)] = MultiPoly::var("nu" + std::to_string(2 * i));
    MultiPoly tail;
    for (int i = 0; i <= 2 * g + 1; ++i)
        tail += c.nu[static_cast<std::size_t>(i)] * c.a.pow(2 * g + 2 - i);
    c.nu[static_cast<std::size_t>(2 * g + 2)] = -tail;
    return c;
}

CurveCtx CurveCtx::concrete(const CurveSpec& spec) {
    CurveCtx c;
    c.g = spec.g;
    c.is_symbolic = false;
    c.a = MultiPoly(spec.a);
    c.nu.resize(spec.nu.size());
    for (std::size_t i = 0; i < spec.nu.size(); ++i) c.nu[i] = MultiPoly(spec.nu[i]);
    return c;
}

MultiPoly CurveCtx::N_of(const MultiPoly& arg) const {
    MultiPoly acc;
    int deg = 2 * g + 2;
    for (int i = 0; i <= deg; ++i) acc += nu[static_cast<std::size_t>(i)] * arg.pow(deg - i);
    return acc;
}

MultiPoly CurveCtx::N_poly() const { return N_of(MultiPoly::var("x")); }

MultiPoly CurveCtx::N_deriv_at_a(int k) const {
    MultiPoly d = N_poly().derivative("x", k);
    RatFunc r = substitute(d, {{"x", RatFunc(a)}});
    return r.reduced().num;
}

MultiPoly CurveCtx::taylor_at_a(int k) const {
    MultiPoly d = N_deriv_at_a(k);
    d *= Rational(1) / factorial_q(k);
    return d;
}

WeightTable CurveCtx::weights() const {
    WeightTable w;
    w.set("x", 2).set("a", 2).set("e1", 2).set("e2", 2);
    w.set("y", 2 * g + 2);
    w.set("s", 4).set("t", 2 * g + 1);
    w.set("X", 2).set("Y", 2 * g + 1);
    for (int i = 0; i <= 2 * g + 2; ++i) w.set("nu" + std::to_string(2 * i), 2 * i);
    for (int i = 1; i <= 2 * g + 1; ++i) w.set("lam" + std::to_string(2 * i), 2 * i);
    for (int i = 1; i <= g; ++i) {
        w.set("x" + std::to_string(i), 2);
        w.set("y" + std::to_string(i), 2 * g + 2);
        w.set("u" + std::to_string(2 * i - 1), -(2 * i - 1));
        w.set("v" + std::to_string(2 * i), -2 * i);
    }
    return w;
}

ScaledModelX ScaledModelX::generic(const CurveCtx& ctx) {
    ScaledModelX m;
    m.ctx = ctx;
    m.s = RatFunc(MultiPoly::var("s"));
    m.t = RatFunc(MultiPoly::var("t"));
    m.constraint_holds = false;
    return m;
}

ScaledModelX ScaledModelX::exact_family(const CurveCtx& ctx, const Rational& k) {
    if (k == 0) throw std::invalid_argument("exact_family: k must be nonzero");
    ScaledModelX m;
    m.ctx = ctx;
    MultiPoly np = ctx.N_deriv_at_a(1);
    m.s = RatFunc(MultiPoly(rat_pow(k, 2)) * np);
    m.t = RatFunc(MultiPoly(rat_pow(k, 2 * ctx.g + 1)) * np.pow(ctx.g));
    m.constraint_holds = true;
    return m;
}

RatFunc ScaledModelX::lambda_tilde(int i) const {
    if (i < 0 || i > 2 * ctx.g + 1) throw std::out_of_range("lambda_tilde index");
    RatFunc si = s.pow(i);
    MultiPoly numer = ctx.N_deriv_at_a(i + 1);
    numer *= Rational(1) / factorial_q(i + 1);
    return si * RatFunc(numer) / RatFunc(ctx.N_deriv_at_a(1));
}

std::vector<RatFunc> ScaledModelX::lambda_tilde_all() const {
    std::vector<RatFunc> out;
    out.reserve(static_cast<std::size_t>(2 * ctx.g + 2));
    for (int i = 0; i <= 2 * ctx.g + 1; ++i) out.push_back(lambda_tilde(i));
    return out;
}

RatFunc ScaledModelX::d_entry(int i, int j) const {
    if (j > i) return RatFunc();
    RatFunc v = s.pow(ctx.g + 1 - i) / t;
    MultiPoly ma = -ctx.a;
    v = v * RatFunc(MultiPoly(binomial(i - 1, j - 1)) * ma.pow(i - j));
    return v;
}

std::vector<std::vector<RatFunc>> ScaledModelX::d_matrix() const {
    std::vector<std::vector<RatFunc>> d(static_cast<std::size_t>(ctx.g));
    for (int i = 1; i <= ctx.g; ++i) {
        d[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(ctx.g));
        for (int j = 1; j <= ctx.g; ++j)
            d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = d_entry(i, j);
    }
    return d;
}

RatFunc ScaledModelX::chi() const {
    int g = ctx.g;
    bool odd = ((g * (g + 1) / 2) % 2) != 0;
    if (odd) return s.pow((g * g - 3 * g - 2) / 4) * t;
    return s.pow(g * (g + 1) / 4);
}

FormOnCurve mu_form(int i) {
    return {RatFunc(MultiPoly::var("x", i - 1), MultiPoly(Rational(2)) * MultiPoly::var("y"))};
}

FormOnCurve omega_form(const ScaledModelX& m, int i) {
    int g = m.ctx.g;
    return {RatFunc(-MultiPoly::var("X", g - i), MultiPoly(Rational(2)) * MultiPoly::var("Y"))};
}

FormOnCurve eta_form(const ScaledModelX& m, int i) {
    int g = m.ctx.g;
    RatFunc acc;
    for (int k = g - i + 1; k <= g + i - 1; ++k) {
        int lam_idx = g + i - k - 1;  // lambda-tilde_{2(g+i-k-1)}
        RatFunc lam = (lam_idx == 0) ? RatFunc(MultiPoly(Rational(1))) : m.lambda_tilde(lam_idx);
        acc = acc + lam * RatFunc(MultiPoly(Rational(k + i - g)) * MultiPoly::var("X", k));
    }
    RatFunc pref(-MultiPoly(Rational(1)), MultiPoly(Rational(2)) * MultiPoly::var("Y"));
    return {pref * acc};
}

FormOnCurve zeta_pullback(const ScaledModelX& m, const FormOnCurve& form) {
    int g = m.ctx.g;
    MultiPoly xma = MultiPoly::var("x") - m.ctx.a;
    std::map<std::string, RatFunc> bind;
    bind["X"] = m.s / RatFunc(xma);
    bind["Y"] = m.t * RatFunc(MultiPoly::var("y"), xma.pow(g + 1));
    RatFunc pulled = substitute(form.density, bind);
    RatFunc dXdx = -m.s / RatFunc(xma.pow(2));
    return {pulled * dXdx};
}

RatFunc zeta_curve_residual(const ScaledModelX& m) {
    // (Y^2 - M~(X)) t^{-2} (x-a)^{2g+2} - (y^2 - N(x)); identically zero for
    // any admissible scaling pair since N(a) = 0
    int g = m.ctx.g;
    MultiPoly xma = MultiPoly::var("x") - m.ctx.a;
    RatFunc Y = m.t * RatFunc(MultiPoly::var("y"), xma.pow(g + 1));
    RatFunc X = m.s / RatFunc(xma);
    RatFunc Mt;
    for (int i = 0; i <= 2 * g + 1; ++i) {
        RatFunc lam = (i == 0) ? RatFunc(MultiPoly(Rational(1))) : m.lambda_tilde(i);
        Mt = Mt + lam * X.pow(2 * g + 1 - i);
    }
    RatFunc lhs = (Y * Y - Mt) * RatFunc(xma.pow(2 * g + 2)) / (m.t * m.t);
    RatFunc rhs = RatFunc(MultiPoly::var("y", 2) - m.ctx.N_of(MultiPoly::var("x")));
    return lhs - rhs;
}

MultiPoly reduce_y(const CurveCtx& ctx, const MultiPoly& p, const std::string& yvar,
                   const std::string& xvar) {
    long dy = p.degree_in(yvar);
    if (dy <= 1) return p;
    MultiPoly N = ctx.N_of(MultiPoly::var(xvar));
    MultiPoly out;
    for (long k = 0; k <= dy; ++k) {
        MultiPoly ck = p.coeff_of(yvar, static_cast<int>(k));
        if (ck.is_zero()) continue;
        MultiPoly t = ck * N.pow(static_cast<int>(k / 2));
        if (k % 2) t *= MultiPoly::var(yvar);
        out += t;
    }
    return out;
}

}  // namespace baker
