#include <doctest.h>

#include "baker/curve.hpp"

using namespace baker;

namespace {
std::vector<Rational> quartic_minus_one() {
    return {rat_of(1), rat_of(0), rat_of(0), rat_of(0), rat_of(-1)};
}
}  // namespace

TEST_CASE("validate_curve examples") {
    CHECK_NOTHROW(validate_curve(1, quartic_minus_one(), rat_of(1)));

    // (x-1)^2 (x^2+1) = x^4 - 2x^3 + 2x^2 - 2x + 1
    std::vector<Rational> mult = {rat_of(1), rat_of(-2), rat_of(2), rat_of(-2), rat_of(1)};
    CHECK_THROWS_AS(validate_curve(1, mult, rat_of(1)), CurveError);
    try {
        validate_curve(1, mult, rat_of(1));
    } catch (const CurveError& e) {
        CHECK(e.kind == CurveError::MultipleRoots);
    }

    try {
        validate_curve(1, quartic_minus_one(), rat_of(2));
    } catch (const CurveError& e) {
        CHECK(e.kind == CurveError::NotABranchPoint);
    }

    std::vector<Rational> nu0zero = {rat_of(0), rat_of(1), rat_of(0), rat_of(0), rat_of(-1)};
    try {
        validate_curve(1, nu0zero, rat_of(1));
    } catch (const CurveError& e) {
        CHECK(e.kind == CurveError::Nu0Zero);
    }
}

TEST_CASE("lambda_tilde basics") {
    for (int g = 1; g <= 3; ++g) {
        CurveCtx ctx = CurveCtx::symbolic(g);
        ScaledModelX m = ScaledModelX::generic(ctx);
        // lambda_tilde_0 = N'(a)/N'(a) = 1
        CHECK(m.lambda_tilde(0).equals(RatFunc(MultiPoly(Rational(1)))));
        // top coefficient: s^{2g+1} nu0 / N'(a)
        RatFunc top = m.lambda_tilde(2 * g + 1);
        RatFunc expect = RatFunc(MultiPoly::var("s", 2 * g + 1) * ctx.nu[0]) /
                         RatFunc(ctx.N_deriv_at_a(1));
        CHECK(top.equals(expect));
        // weight 2i with respect to s, a, nu
        WeightTable w = ctx.weights();
        for (int i = 0; i <= 2 * g + 1; ++i) {
            auto gw = m.lambda_tilde(i).graded_weight(w);
            REQUIRE(gw.has_value());
            CHECK(*gw == 2 * i);
        }
    }
}

TEST_CASE("two scalings relate lambda_tilde by (s2/s1)^i") {
    CurveCtx ctx = CurveCtx::symbolic(2);
    ScaledModelX m1 = ScaledModelX::exact_family(ctx, rat_of(1));
    ScaledModelX m2 = ScaledModelX::exact_family(ctx, rat_of(2));
    // s2/s1 = 4
    for (int i = 0; i <= 5; ++i) {
        RatFunc lhs = m2.lambda_tilde(i);
        RatFunc rhs = m1.lambda_tilde(i) * RatFunc(MultiPoly(rat_pow(rat_of(4), i)));
        CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("D matrix entries") {
    CurveCtx c1 = CurveCtx::symbolic(1);
    ScaledModelX m1 = ScaledModelX::generic(c1);
    CHECK(m1.d_entry(1, 1).equals(RatFunc(MultiPoly::var("s"), MultiPoly::var("t"))));

    CurveCtx c2 = CurveCtx::symbolic(2);
    ScaledModelX m2 = ScaledModelX::generic(c2);
    RatFunc s(MultiPoly::var("s")), t(MultiPoly::var("t")), a(MultiPoly::var("a"));
    CHECK(m2.d_entry(2, 1).equals(s / t * (-a)));
    CHECK(m2.d_entry(2, 2).equals(s / t));
    CHECK(m2.d_entry(1, 2).is_zero());  // lower triangular
    CHECK(m2.d_entry(1, 1).equals(s.pow(2) / t));
}

TEST_CASE("pullback identity zeta*(omega_i) = sum_j D_ij mu_j") {
    for (int g = 1; g <= 3; ++g) {
        CurveCtx ctx = CurveCtx::symbolic(g);
        ScaledModelX m = ScaledModelX::generic(ctx);
        auto D = m.d_matrix();
        for (int i = 1; i <= g; ++i) {
            FormOnCurve lhs = zeta_pullback(m, omega_form(m, i));
            RatFunc rhs;
            for (int j = 1; j <= g; ++j)
                rhs = rhs + D[static_cast<std::size_t>(i - 1)][static_cast<std::size_t >(j - 1)] *
                                mu_form(j).density;
            CHECK(lhs.density.equals(rhs));
        }
    }
}

TEST_CASE("zeta lands on the transformed curve") {
    // symbolic: residual vanishes identically modulo the relation N(a) = 0
    for (int g = 1; g <= 2; ++g) {
        CurveCtx ctx = CurveCtx::symbolic(g);
        ScaledModelX m = ScaledModelX::exact_family(ctx, rat_of(1));
        RatFunc res = zeta_curve_residual(m);
        CHECK(res.num.is_zero());
    }
    // concrete curve where N(a) = 0 exactly
    CurveSpec spec = validate_curve(1, quartic_minus_one(), rat_of(1));
    ScaledModelX mc = ScaledModelX::exact_family(CurveCtx::concrete(spec), rat_of(1));
    CHECK(zeta_curve_residual(mc).num.is_zero());
}

TEST_CASE("eta catalog") {
    CurveCtx ctx = CurveCtx::symbolic(1);
    ScaledModelX m = ScaledModelX::generic(ctx);
    FormOnCurve e1 = eta_form(m, 1);
    RatFunc expect(-MultiPoly::var("X"), MultiPoly(Rational(2)) * MultiPoly::var("Y"));
    CHECK(e1.density.equals(expect));

    // i=1 at any genus: single term -X^g/(2Y)
    for (int g = 2; g <= 3; ++g) {
        CurveCtx c = CurveCtx::symbolic(g);
        ScaledModelX mg = ScaledModelX::generic(c);
        RatFunc exp_g(-MultiPoly::var("X", g), MultiPoly(Rational(2)) * MultiPoly::var("Y"));
        CHECK(eta_form(mg, 1).density.equals(exp_g));
    }
}

TEST_CASE("mu catalog") {
    CHECK(mu_form(1).density.equals(
        RatFunc(MultiPoly(Rational(1)), MultiPoly(Rational(2)) * MultiPoly::var("y"))));
    // count: forms mu_1..mu_g exist and are distinct
    CHECK(!mu_form(2).density.equals(mu_form(1).density));
}

TEST_CASE("chi examples") {
    CurveCtx c1 = CurveCtx::symbolic(1);
    ScaledModelX m1 = ScaledModelX::generic(c1);
    CHECK(m1.chi().equals(RatFunc(MultiPoly::var("t"), MultiPoly::var("s"))));

    CurveCtx c2 = CurveCtx::symbolic(2);
    ScaledModelX m2 = ScaledModelX::generic(c2);
    CHECK(m2.chi().equals(RatFunc(MultiPoly::var("t"), MultiPoly::var("s"))));

    CurveCtx c3 = CurveCtx::symbolic(3);
    ScaledModelX m3 = ScaledModelX::generic(c3);
    CHECK(m3.chi().equals(RatFunc(MultiPoly::var("s", 3))));
}

TEST_CASE("determinant of D is the product of diagonal entries") {
    CurveCtx ctx = CurveCtx::symbolic(2);
    ScaledModelX m = ScaledModelX::generic(ctx);
    auto D = m.d_matrix();
    RatFunc det = D[0][0] * D[1][1] - D[0][1] * D[1][0];
    CHECK(det.equals(D[0][0] * D[1][1]));
    CHECK(!det.is_zero());
}

TEST_CASE("reduce_y") {
    CurveCtx ctx = CurveCtx::symbolic(1);
    MultiPoly y = MultiPoly::var("y"), x = MultiPoly::var("x");
    MultiPoly N = ctx.N_of(x);
    CHECK(reduce_y(ctx, y.pow(2)) == N);
    CHECK(reduce_y(ctx, y.pow(3)) == N * y);
    CHECK(reduce_y(ctx, y.pow(4) + y) == N * N + y);
}
