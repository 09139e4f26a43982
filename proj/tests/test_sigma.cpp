#include <doctest.h>

#include "baker/hseries.hpp"
#include "baker/sigma.hpp"

using namespace baker;

using P = DoublePrec;
using C = std::complex<double>;

namespace {
CurveSpec quartic() {
    return validate_curve(1, {rat_of(1), rat_of(0), rat_of(0), rat_of(0), rat_of(-1)}, rat_of(1));
}
CurveSpec sextic() {
    return validate_curve(2,
                          {rat_of(1), rat_of(0), rat_of(-35, 4), rat_of(0), rat_of(259, 16),
                           rat_of(0), rat_of(-225, 64)},
                          rat_of(5, 2));
}

struct Stack {
    NumCurve<P> nc;
    NumModel<P> m;
    Surface<P> S;
    PeriodsResult<P> pr;
    std::vector<int> d1, d2;
    SigmaCtx<P> sc;
};

Stack build(const CurveSpec& spec) {
    Stack st{make_numcurve<P>(spec), {}, {}, {}, {}, {}, {}};
    st.m = make_model_default<P>(st.nc);
    st.S = make_surface<P>(st.nc, 1e-12);
    st.pr = compute_periods<P>(st.S, st.m);
    auto ch = find_riemann_constant<P>(st.S, st.m, st.pr, 42);
    st.d1 = ch.first;
    st.d2 = ch.second;
    st.sc = make_sigma_ctx<P>(st.pr, st.d1, st.d2, st.nc.g);
    return st;
}
}  // namespace

TEST_CASE("theta basics: odd characteristic vanishes, parity, shift") {
    Mat<C> tau(1, 1);
    tau(0, 0) = C(0.3, 1.1);
    auto tc = make_theta_context<P>(tau, {1}, {1});
    auto t0 = theta_jet<P>(tc, {C(0, 0)}, {}, 0);
    CHECK(std::abs(t0.scaled_value()) < 1e-12);

    // parity: theta[d](-z) = (-1)^{4 d' d''} theta[d](z)
    std::vector<C> z{C(0.17, 0.21)};
    auto tp = theta_jet<P>(tc, z, {}, 0);
    auto tm = theta_jet<P>(tc, {-z[0]}, {}, 0);
    C vp = tp.scaled_value() * std::exp(C(tp.log_scale - tm.log_scale, 0));
    CHECK(std::abs(vp + tm.scaled_value()) < 1e-12);  // odd char: sign -1

    auto tce = make_theta_context<P>(tau, {0}, {1});
    auto ep = theta_jet<P>(tce, z, {}, 0);
    auto em = theta_jet<P>(tce, {-z[0]}, {}, 0);
    C ve = ep.scaled_value() * std::exp(C(ep.log_scale - em.log_scale, 0));
    CHECK(std::abs(ve - em.scaled_value()) < 1e-12);  // even char: sign +1

    // z -> z + 1 multiplies by exp(2 pi i d'_1)
    auto ts = theta_jet<P>(tc, {z[0] + C(1, 0)}, {}, 0);
    C ratio = ts.scaled_value() / tp.scaled_value() *
              std::exp(C(ts.log_scale - tp.log_scale, 0));
    C expect = std::exp(C(0, 2 * 3.14159265358979324 * 0.5));
    CHECK(std::abs(ratio - expect) < 1e-12);
}

TEST_CASE("theta derivative jets match finite differences") {
    Mat<C> tau(2, 2);
    tau(0, 0) = C(0.21, 0.9);
    tau(0, 1) = C(0.1, 0.25);
    tau(1, 0) = tau(0, 1);
    tau(1, 1) = C(-0.15, 1.3);
    auto tc = make_theta_context<P>(tau, {1, 0}, {0, 1});
    std::vector<C> z{C(0.12, 0.04), C(-0.2, 0.1)};
    std::vector<std::vector<C>> dirs{{C(1, 0), C(0.3, 0.1)}};
    auto tj = theta_jet<P>(tc, z, dirs, 2);
    auto val = [&](double h) {
        std::vector<C> zz{z[0] + h * dirs[0][0], z[1] + h * dirs[0][1]};
        auto t = theta_jet<P>(tc, zz, {}, 0);
        return t.scaled_value() * std::exp(C(t.log_scale - tj.log_scale, 0));
    };
    double h = 1e-5;
    C d1_fd = (val(h) - val(-h)) / (2 * h);
    C d2_fd = (val(h) - 2.0 * val(0) + val(-h)) / (h * h);
    C d1_an = tj.m[tj.idx.at({1})];
    C d2_an = tj.m[tj.idx.at({2})];
    CHECK(std::abs(d1_fd - d1_an) < 1e-6 * (1 + std::abs(d1_an)));
    CHECK(std::abs(d2_fd - d2_an) < 1e-4 * (1 + std::abs(d2_an)));
}

TEST_CASE("riemann constant at genus 1 is the odd characteristic") {
    Stack st = build(quartic());
    CHECK(st.d1 == std::vector<int>{1});
    CHECK(st.d2 == std::vector<int>{1});
    // determinism: a different seed gives the same characteristic
    auto ch2 = find_riemann_constant<P>(st.S, st.m, st.pr, 777);
    CHECK(ch2.first == st.d1);
    CHECK(ch2.second == st.d2);
}

TEST_CASE("genus-1 sigma against the exact series oracle") {
    Stack st = build(quartic());
    // lambda-tilde of the transformed curve (numeric, s=1 scaling)
    Rational l2q, l4q, l6q;
    {
        CurveCtx cc = CurveCtx::concrete(quartic());
        ScaledModelX mx = ScaledModelX::exact_family(cc, rat_of(1));
        auto v = [&](int i) -> Rational {
            RatFunc r = mx.lambda_tilde(i).reduced();
            return r.num.constant_value() / r.den.constant_value();
        };
        l2q = v(1);
        l4q = v(2);
        l6q = v(3);
    }
    // numeric model uses s = 1: lambda-tilde differ from the exact-family by
    // (s_family)^i; evaluate the oracle at the numeric model's coefficients
    auto lt = st.m.lt;
    auto oracle = genus1_sigma_series<Rational>(rat_of(0), rat_of(0), rat_of(0), 1);
    (void)oracle;
    (void)l2q; (void)l4q; (void)l6q;

    // evaluate sigma from the theta route and from the series at small u
    auto sig_theta = [&](double u1) {
        std::vector<C> u{C(u1, 0)};
        return std::exp(sigma_log_raw<P>(st.sc, u)) * st.sc.eps;
    };
    // series with numeric lambda values
    auto sig_series = [&](double u1) {
        C acc(0), up(u1, 0);
        // exp(l2 u^2/6) sigma_W с g2,g3 from lt; build with complex Horner
        C l2 = st.m.lt[1], l4 = st.m.lt[2], l6 = st.m.lt[3];
        C g2 = -4.0 * (l4 - l2 * l2 / 3.0);
        C g3 = -4.0 * (l6 - l2 * l4 / 3.0 + 2.0 * l2 * l2 * l2 / 27.0);
        // classical sigma series coefficients via the c-recurrence
        int nmax = 26;
        std::vector<C> c(nmax + 1, C(0));
        c[2] = g2 / 20.0;
        c[3] = g3 / 28.0;
        for (int n = 4; n <= nmax; ++n) {
            C s(0);
            for (int m2 = 2; m2 <= n - 2; ++m2) s += c[m2] * c[n - m2];
            c[n] = s * 3.0 / ((2.0 * n + 1.0) * (n - 3.0));
        }
        // log(sigma_W/u) = -sum c_k u^{2k}/(2k(2k-1))
        C logp(0), u2 = up * up, ppow = u2 * u2;
        for (int k = 2; 2 * k <= 2 * nmax; ++k) {
            if (k <= nmax) logp -= c[k] * ppow / (2.0 * k * (2.0 * k - 1.0));
            ppow *= u2;
        }
        acc = up * std::exp(logp + l2 * u2 / 6.0);
        return acc;
    };
    for (double u1 : {0.05, 0.03, -0.04}) {
        C a = sig_theta(u1), b = sig_series(u1);
        CHECK(std::abs(a - b) < 1e-8 * std::abs(b));
    }
}

TEST_CASE("abel map: reversal and involution lattice consistency") {
    Stack st = build(sextic());
    std::vector<std::pair<C, C>> q1{{C(0.9, 0.7), C(0, 0)}};
    q1[0].second = std::sqrt(st.nc.N(q1[0].first));
    auto v = abel_sum<P>(st.S, st.m.mu, q1);
    // involution: v(Q) + v(iota Q) lies in the period lattice
    std::vector<std::pair<C, C>> q2{{q1[0].first, -q1[0].second}};
    auto w = abel_sum<P>(st.S, st.m.mu, q2);
    std::vector<C> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] + w[i];
    // reduce modulo the lattice (2mu', 2mu''): solve [2mu' 2mu''] s in
    // real coordinates and check integrality
    std::size_t g = v.size();
    Mat<double> A(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            A(i, j) = 2 * st.pr.mu1(i, j).real();
            A(i + g, j) = 2 * st.pr.mu1(i, j).imag();
            A(i, j + g) = 2 * st.pr.mu2(i, j).real();
            A(i + g, j + g) = 2 * st.pr.mu2(i, j).imag();
        }
    std::vector<double> rhs(2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        rhs[i] = s[i].real();
        rhs[i + g] = s[i].imag();
    }
    auto coef = A.inverse().apply(rhs);
    for (double cc : coef) CHECK(std::abs(cc - std::round(cc)) < 1e-8);
}
