#include <doctest.h>

#include <random>
#include "baker/numcurve.hpp"
#include "baker/periods.hpp"

using namespace baker;

using P = DoublePrec;
using C = std::complex<double>;

namespace {
CurveSpec quartic() {
    return validate_curve(1, {rat_of(1), rat_of(0), rat_of(0), rat_of(0), rat_of(-1)}, rat_of(1));
}
}  // namespace

TEST_CASE("roots of x^4 - 1") {
    NumCurve<P> nc = make_numcurve<P>(quartic());
    REQUIRE(nc.roots.size() == 4);
    // sorted by (Re, Im): -1, -i, i, 1
    CHECK(std::abs(nc.roots[0] - C(-1, 0)) < 1e-13);
    CHECK(std::abs(nc.roots[1] - C(0, -1)) < 1e-13);
    CHECK(std::abs(nc.roots[2] - C(0, 1)) < 1e-13);
    CHECK(std::abs(nc.roots[3] - C(1, 0)) < 1e-13);
    CHECK(nc.a_idx == 3);
}

TEST_CASE("root residuals on random real-rooted curves") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-3, 3);
    for (int rep = 0; rep < 10; ++rep) {
        // random monic polynomial from random roots
        int deg = 4 + 2 * (rep % 2);
        std::vector<C> roots;
        while (static_cast<int>(roots.size()) < deg) {
            C r(d(rng), d(rng) * 0.3);
            bool ok = true;
            for (auto& q : roots) ok = ok && std::abs(q - r) > 0.3;
            if (ok) roots.push_back(r);
        }
        std::vector<C> coef{C(1, 0)};
        for (auto& r : roots) {
            std::vector<C> nxt(coef.size() + 1, C(0));
            for (std::size_t i = 0; i < coef.size(); ++i) {
                nxt[i] += coef[i];
                nxt[i + 1] -= coef[i] * r;
            }
            coef = nxt;
        }
        auto got = poly_roots<P>(coef);
        double nrm = 0;
        for (auto& c : coef) nrm = std::max(nrm, std::abs(c));
        for (auto& r : got) {
            double res = std::abs(horner<P>(coef, r));
            double bound = 1e-12 * nrm * std::pow(std::max(1.0, std::abs(r)), deg);
            CHECK(res < bound);
        }
    }
}

TEST_CASE("validation errors") {
    // perturbed curve with a not a root
    CurveSpec s = quartic();
    s.a = rat_of(2);
    CHECK_THROWS_AS(make_numcurve<P>(s), NumError);
}

TEST_CASE("taylor coefficients at the branch point") {
    NumCurve<P> nc = make_numcurve<P>(quartic());
    auto t = nc.taylor();  // N(1+s) = 4s + 6s^2 + 4s^3 + s^4
    CHECK(std::abs(t[0]) < 1e-14);
    CHECK(std::abs(t[1] - C(4, 0)) < 1e-13);
    CHECK(std::abs(t[2] - C(6, 0)) < 1e-13);
    CHECK(std::abs(t[3] - C(4, 0)) < 1e-13);
    CHECK(std::abs(t[4] - C(1, 0)) < 1e-13);
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
    const auto& r = gauss_legendre<double>(8);
    double s = 0;
    for (int i = 0; i < 8; ++i) s += r.w[static_cast<std::size_t>(i)];
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
    // integral of x^10 on [-1,1] = 2/11
    double v = 0;
    for (int i = 0; i < 8; ++i)
        v += r.w[static_cast<std::size_t>(i)] * std::pow(r.x[static_cast<std::size_t>(i)], 10);
    CHECK(v == doctest::Approx(2.0 / 11).epsilon(1e-13));
}

TEST_CASE("path integration closes loops and reverses") {
    NumCurve<P> nc = make_numcurve<P>(quartic());
    // a little rectangle far from the roots: integral of dx/(2y) over a
    // closed contractible loop is 0
    C z0(2.5, 1.0);
    std::vector<Piece<P>> loop{Piece<P>::seg(z0, z0 + C(1, 0)),
                               Piece<P>::seg(z0 + C(1, 0), z0 + C(1, 1)),
                               Piece<P>::seg(z0 + C(1, 1), z0 + C(0, 1)),
                               Piece<P>::seg(z0 + C(0, 1), z0)};
    LaurentForm<P> mu1;
    mu1.lo = 0;
    mu1.c = {C(1, 0)};
    C y0 = std::sqrt(nc.N(z0));
    C yend{};
    auto v = integrate_forms<P>(nc, loop, y0, {mu1}, 1e-12, &yend);
    CHECK(std::abs(v[0]) < 1e-11);
    CHECK(std::abs(yend - y0) < 1e-10);
}

TEST_CASE("plan_path detours around obstacles") {
    std::vector<C> obstacles{C(0.5, 0.0)};
    auto path = plan_path<P>(C(0, 0), C(1, 0), obstacles, 0.2);
    REQUIRE(path.size() >= 3);
    // no point of the path comes too near the obstacle
    for (const auto& pc : path)
        for (int i = 0; i <= 16; ++i) {
            double t = i / 16.0;
            CHECK(std::abs(pc.at(t) - obstacles[0]) > 0.15);
        }
}

TEST_CASE("small matrix inverse and eigenvalues") {
    Mat<C> m(2, 2);
    m(0, 0) = C(1, 1);
    m(0, 1) = C(2, 0);
    m(1, 0) = C(0, 1);
    m(1, 1) = C(3, -1);
    Mat<C> id = m * m.inverse();
    CHECK(std::abs(id(0, 0) - C(1, 0)) < 1e-14);
    CHECK(std::abs(id(0, 1)) < 1e-14);
    CHECK(std::abs(id(1, 0)) < 1e-14);
    CHECK(std::abs(id(1, 1) - C(1, 0)) < 1e-14);

    Mat<double> s(2, 2);
    s(0, 0) = 2;
    s(0, 1) = 1;
    s(1, 0) = 1;
    s(1, 1) = 2;
    auto ev = symmetric_eigenvalues(s);
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("quad precision roots polish beyond double") {
    using Q = QuadPrec;
    CurveSpec s = quartic();
    NumCurve<Q> nc = make_numcurve<Q>(s);
    using std::abs;
    for (const auto& r : nc.roots) {
        auto res = abs(nc.N(r));
        CHECK(res < QuadPrec::Real(1e-30));
    }
}
