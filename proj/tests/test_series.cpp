#include <doctest.h>

#include "baker/series.hpp"

using namespace baker;

namespace {
MultiPoly T(int i, int p = 1) { return MultiPoly::var("T" + std::to_string(i), p); }
MultiPoly C(long n, long d = 1) { return MultiPoly(rat_of(n, d)); }
}  // namespace

TEST_CASE("first p polynomials") {
    auto p = p_polynomials(5);
    CHECK(p[0] == C(1));
    CHECK(p[1] == T(1));
    CHECK(p[2] == T(2) + T(1, 2) * rat_of(1, 2));
    CHECK(p[3] == T(3) + T(1) * T(2) + T(1, 3) * rat_of(1, 6));
    CHECK(p_polynomial(-2).is_zero());
}

TEST_CASE("p_n derivative recurrence d p_n / d T1 = p_{n-1}") {
    auto p = p_polynomials(8);
    for (int n = 1; n <= 8; ++n)
        CHECK(p[static_cast<std::size_t>(n)].derivative("T1") ==
              p[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("schur determinants") {
    CHECK(schur_T(1) == T(1));
    CHECK(schur_T(2) == T(1, 3) * rat_of(1, 3) - T(3));
    // g=3: odd variables only; leading monomial T1^6/45
    MultiPoly s3 = schur_T(3);
    CHECK(s3.scalar_coeff({{"T1", 6}}) == rat_of(1, 45));
    CHECK(!s3.depends_on("T2"));
    CHECK(!s3.depends_on("T4"));
    // g=4 still passes the even-variable elimination
    CHECK_NOTHROW(schur_T(4));
}

TEST_CASE("schur_u weights") {
    for (int g = 1; g <= 4; ++g) {
        MultiPoly s = schur_u(g);
        WeightTable w;
        for (int i = 1; i <= 2 * g - 1; i += 2) w.set("u" + std::to_string(i), -i);
        auto gw = s.graded_weight(w);
        REQUIRE(gw.has_value());
        CHECK(*gw == -g * (g + 1) / 2);
    }
    CHECK(schur_u(1) == MultiPoly::var("u1"));
    CHECK(schur_u(2) == MultiPoly::var("u1", 3) * rat_of(1, 3) - MultiPoly::var("u3"));
}

TEST_CASE("series exp") {
    USeries<Rational> s(6);
    s[1] = rat_of(1);
    auto e = series_exp(s);  // exp(z)
    for (int k = 0; k <= 6; ++k) CHECK(e[k] == rat_of(1) / factorial_q(k));
}

TEST_CASE("weierstrass sigma series matches classical table") {
    // sigma = z - g2 z^5/240 - g3 z^7/840 - g2^2 z^9/161280 - g2 g3 z^11/161280
    MultiPoly g2 = MultiPoly::var("g2"), g3 = MultiPoly::var("g3");
    auto sig = weierstrass_sigma_series<MultiPoly>(g2, g3, 11);
    CHECK(sig[1] == C(1));
    CHECK(sig[3].is_zero());
    CHECK(sig[5] == g2 * rat_of(-1, 240));
    CHECK(sig[7] == g3 * rat_of(-1, 840));
    CHECK(sig[9] == g2 * g2 * rat_of(-1, 161280));
    CHECK(sig[11] == g2 * g3 * rat_of(-1, 2217600));
}

TEST_CASE("genus-1 sigma oracle leading structure") {
    // degenerate invariants: sigma = u exactly
    auto s0 = genus1_sigma_oracle(rat_of(0), rat_of(0), rat_of(0), 9);
    CHECK(s0[1] == 1);
    for (int k = 2; k <= 9; ++k) CHECK(s0[k] == 0);

    // symbolic homogeneity: coefficient of u^n has weight n-1 in lam_i
    MultiPoly l2 = MultiPoly::var("lam2"), l4 = MultiPoly::var("lam4"),
              l6 = MultiPoly::var("lam6");
    auto s = genus1_sigma_series<MultiPoly>(l2, l4, l6, 13);
    WeightTable w;
    w.set("lam2", 2).set("lam4", 4).set("lam6", 6);
    CHECK(s[1] == C(1));
    for (int n = 2; n <= 13; ++n) {
        if (s[n].is_zero()) continue;
        CHECK(n % 2 == 1);  // odd function
        auto gw = s[n].graded_weight(w);
        REQUIRE(gw.has_value());
        CHECK(*gw == n - 1);
    }
    CHECK(s[3] == l2 * rat_of(1, 6));
}
