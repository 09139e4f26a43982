#include <doctest.h>

#include "baker/checks.hpp"

using namespace baker;

TEST_CASE("curve JSON parsing") {
    CurveInput in = parse_curve_json(
        R"({"genus":1,"nu":["1","0","0","0","-1"],"branch_point":"1"})");
    CHECK(in.genus == 1);
    CHECK(in.nu.size() == 5);
    CHECK(in.exact_branch());
    CHECK_NOTHROW(in.spec());

    // missing nu entry
    CHECK_THROWS_AS(parse_curve_json(R"({"genus":1,"nu":["1","0","0","-1"],"branch_point":"1"})"),
                    ParseError);
    // nu0 = 0 surfaces as a curve validation error
    CurveInput bad = parse_curve_json(
        R"({"genus":1,"nu":["0","1","0","0","-1"],"branch_point":"1"})");
    CHECK_THROWS_AS(bad.spec(), CurveError);
    // malformed JSON
    CHECK_THROWS_AS(parse_curve_json("{"), ParseError);
    // decimal strings convert exactly
    CurveInput dec = parse_curve_json(
        R"({"genus":1,"nu":["1","0.5","0","0","-0.25"],"branch_point":0})");
    CHECK(dec.nu[1] == rat_of(1, 2));
    CHECK(dec.nu[4] == rat_of(-1, 4));
    CHECK(!dec.exact_branch());
    CHECK(dec.branch_index.value() == 0);
    // scaling block
    CurveInput sc = parse_curve_json(
        R"({"genus":1,"nu":["1","0","0","0","-1"],"branch_point":"1","scaling":{"s":"4","t":"4"}})");
    REQUIRE(sc.scaling.has_value());
    CHECK(sc.scaling->first == rat_of(4));
}

TEST_CASE("report canonical encoding is deterministic and diff-stable") {
    Report r;
    r.suite = "algebraic";
    r.seed = 7;
    r.curve_fingerprint = "deadbeef00000000";
    r.checks.push_back(make_check("sample", "sample-ref", 1.2345678901234567e-9, 1e-8));
    r.checks.push_back(make_check("failing", "sample-ref", 2.0, 1e-8));
    std::string a = report_to_canonical_json(r);
    std::string b = report_to_canonical_json(r);
    CHECK(a == b);
    CHECK(a.find("\"pass\": true") != std::string::npos);
    CHECK(a.find("\"pass\": false") != std::string::npos);
    CHECK(a.find("\"timing_sec\": null") != std::string::npos);
    // 17 significant digits survive
    CHECK(a.find("1.2345678901234566e-09") != std::string::npos);
    CHECK(!r.all_pass());
}

TEST_CASE("fingerprint is stable under key order and depends on content") {
    CurveInput a = parse_curve_json(
        R"({"genus":1,"nu":["1","0","0","0","-1"],"branch_point":"1"})");
    CurveInput b = parse_curve_json(
        R"({"branch_point":"1","nu":["1","0","0","0","-1"],"genus":1})");
    CHECK(fnv1a64(a.canonical_json()) == fnv1a64(b.canonical_json()));
    CurveInput c = parse_curve_json(
        R"({"genus":1,"nu":["1","0","0","0","-2"],"branch_point":"1"})");
    CHECK(fnv1a64(a.canonical_json()) != fnv1a64(c.canonical_json()));
}

TEST_CASE("algebraic suite passes at g=1 with small samples") {
    SuiteOptions opt;
    opt.seed = 3;
    opt.concrete_divisors = 4;
    opt.series_order = 11;
    auto checks = algebraic_suite(1, opt);
    CHECK(checks.size() >= 15);
    for (const auto& c : checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}
