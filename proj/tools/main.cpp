// Command-line front end: exact constructions (baker, omega, expand), period
// data (periods), and the verification suites (verify) with machine-readable
// reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

#include "baker/baker_functions.hpp"
#include "baker/checks.hpp"
#include "baker/hfunction.hpp"
#include "baker/hseries.hpp"

using namespace baker;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitConfig = 2;

json cplx_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

template <class P>
json mat_json(const Mat<typename P::Complex>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cplx_json(to_cd(m(i, j))));
        rows.push_back(row);
    }
    return rows;
}

CurveCtx ctx_from(const CurveInput& in) { return CurveCtx::concrete(in.spec()); }

int cmd_baker(int g, bool symbolic, const std::string& curve_file,
              const std::string& points_file, bool as_json) {
    CurveCtx ctx = symbolic ? CurveCtx::symbolic(g) : ctx_from(load_curve_file(curve_file));
    g = ctx.g;
    BakerMatrixX bm = baker_matrix(ctx, Divisor::symbolic(g));
    if (!points_file.empty()) {
        if (symbolic) throw ParseError("--points needs a concrete curve");
        auto pts = load_points_file(points_file);
        CurveSpec spec = load_curve_file(curve_file).spec();
        auto P = baker_evaluate<std::complex<double>>(bm, spec, pts);
        json pj = json::array();
        for (auto& row : P) {
            json r = json::array();
            for (auto& v : row) r.push_back(cplx_json(v));
            pj.push_back(r);
        }
        std::cout << json{{"baker_values", pj}}.dump(2) << "\n";
        return kExitPass;
    }
    if (as_json) {
        json entries = json::array();
        for (int i = 1; i <= g; ++i)
            for (int j = 1; j <= g; ++j)
                entries.push_back({{"i", 2 * g + 2 - 2 * i},
                                   {"j", 2 * g + 2 - 2 * j},
                                   {"value", bm.entry(i, j).str()}});
        std::cout << json{{"genus", g}, {"entries", entries}}.dump(2) << "\n";
    } else {
        for (int i = 1; i <= g; ++i)
            for (int j = i; j <= g; ++j)
                std::cout << "P_{" << 2 * g + 2 - 2 * i << "," << 2 * g + 2 - 2 * j
                          << "} = " << bm.entry(i, j).str() << "\n";
    }
    return kExitPass;
}

int cmd_omega(int g, bool symbolic, const std::string& curve_file, bool as_json) {
    CurveCtx ctx = symbolic ? CurveCtx::symbolic(g) : ctx_from(load_curve_file(curve_file));
    g = ctx.g;
    OmegaMatrixX om = omega_recursion(ctx);
    auto ks = kappa_numerators(ctx, om);
    ScaledModelX m = ScaledModelX::generic(ctx);
    json oj = json::array();
    for (int i = 1; i <= g; ++i) {
        json row = json::array();
        for (int j = 1; j <= g; ++j) row.push_back(om.at(i, j).str());
        oj.push_back(row);
    }
    json kj = json::array();
    for (int i = 1; i <= g; ++i) kj.push_back(ks[static_cast<std::size_t>(i - 1)].str());
    if (as_json) {
        std::cout << json{{"genus", g},
                          {"omega", oj},
                          {"kappa_numerators", kj},
                          {"kappa_denominator", "(x-a)^" + std::to_string(g) + " * 2*y"},
                          {"chi", m.chi().str()}}
                         .dump(2)
                  << "\n";
    } else {
        for (int i = 1; i <= g; ++i)
            for (int j = i; j <= g; ++j)
                std::cout << "n_{" << i << "," << j << "} = " << om.at(i, j).str() << "\n";
        for (int i = 1; i <= g; ++i)
            std::cout << "kappa_" << i << " = (" << ks[static_cast<std::size_t>(i - 1)].str()
                      << ") / ((x-a)^" << g << " * 2*y) dx\n";
        std::cout << "chi = " << m.chi().str() << "\n";
    }
    return kExitPass;
}

int cmd_expand(int g, bool symbolic, const std::string& curve_file, int order, bool as_json) {
    if (g != 1) throw ParseError("expand supports genus 1");
    CurveCtx ctx = symbolic ? CurveCtx::symbolic(1) : ctx_from(load_curve_file(curve_file));
    HSeriesG1 hs = h_series_genus1(ctx, order);
    if (as_json) {
        json terms = json::array();
        for (int n = 0; n <= order; ++n) {
            const RatFunc& xi = hs.xi[static_cast<std::size_t>(n)];
            if (xi.is_zero()) continue;
            terms.push_back({{"power", n}, {"coefficient", xi.str()}});
        }
        std::cout << json{{"genus", 1}, {"order", order}, {"series", terms}}.dump(2) << "\n";
    } else {
        std::cout << "H(v2) =";
        bool first = true;
        for (int n = 0; n <= order; ++n) {
            const RatFunc& xi = hs.xi[static_cast<std::size_t>(n)];
            if (xi.is_zero()) continue;
            std::cout << (first ? " " : " + ") << "(" << xi.str() << ")*v2^" << n;
            first = false;
        }
        std::cout << " + O(v2^" << order + 1 << ")\n";
    }
    return kExitPass;
}

template <class P>
int cmd_periods_impl(const CurveInput& in, unsigned seed, const std::string& out_path) {
    using C = typename P::Complex;
    NumCurve<P> nc = make_numcurve<P>(in.spec());
    NumModel<P> m = in.scaling ? make_model<P>(nc, rat_to<C>(in.scaling->first),
                                               rat_to<C>(in.scaling->second))
                               : make_model_default<P>(nc);
    Surface<P> S = make_surface<P>(nc, real_eps<P>() * typename P::Real(1e4));
    PeriodsResult<P> pr = compute_periods<P>(S, m);
    auto ch = find_riemann_constant<P>(S, m, pr, seed);
    json j;
    j["genus"] = in.genus;
    j["curve_fingerprint"] = [&] {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(in.canonical_json())));
        return std::string(buf);
    }();
    json roots = json::array();
    for (const auto& r : nc.roots) roots.push_back(cplx_json(to_cd(r)));
    j["branch_points"] = roots;
    j["mu1"] = mat_json<P>(pr.mu1);
    j["mu2"] = mat_json<P>(pr.mu2);
    j["omega1"] = mat_json<P>(pr.om1);
    j["omega2"] = mat_json<P>(pr.om2);
    j["eta1"] = mat_json<P>(pr.eta1);
    j["eta2"] = mat_json<P>(pr.eta2);
    j["kappa1"] = mat_json<P>(pr.kap1);
    j["kappa2"] = mat_json<P>(pr.kap2);
    j["tau"] = mat_json<P>(pr.tau);
    j["characteristic_d1"] = ch.first;
    j["characteristic_d2"] = ch.second;
    j["diagnostics"] = {{"legendre_K", to_dbl(pr.legendre_K_err)},
                        {"legendre_kappa", to_dbl(pr.legendre_KK_err)},
                        {"tau_symmetry", to_dbl(pr.tau_sym_err)},
                        {"tau_im_min", to_dbl(pr.tau_im_min)},
                        {"d_transfer", to_dbl(pr.d_transfer_err)},
                        {"kappa_two_routes", to_dbl(pr.kappa_cross_err)}};
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
    return kExitPass;
}

int cmd_verify(const std::string& curve_file, int genus, bool symbolic, const std::string& suite,
               unsigned seed, const std::string& precision, const std::string& report_path,
               bool timing, double tol_scale) {
    if (tol_scale <= 0) throw ParseError("tolerance scale must be positive");
    SuiteOptions opt;
    opt.seed = seed;
    opt.extended = precision == "extended";
    auto t0 = std::chrono::steady_clock::now();

    Report rep;
    rep.suite = suite;
    rep.seed = seed;
    rep.precision = precision;

    std::optional<CurveInput> in;
    if (!curve_file.empty()) {
        in = load_curve_file(curve_file);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(in->canonical_json())));
        rep.curve_fingerprint = buf;
    } else {
        rep.curve_fingerprint = "symbolic-genus-" + std::to_string(genus);
    }

    auto run_alg = [&] {
        int g = in ? in->genus : genus;
        auto v = algebraic_suite(g, opt);
        rep.checks.insert(rep.checks.end(), v.begin(), v.end());
    };
    auto need_curve = [&]() -> const CurveInput& {
        if (!in) throw ParseError("suite '" + suite + "' needs --curve");
        return *in;
    };
    if (suite == "algebraic") {
        run_alg();
    } else if (suite == "periods") {
        auto v = periods_suite(need_curve(), opt);
        rep.checks.insert(rep.checks.end(), v.begin(), v.end());
    } else if (suite == "h-identities") {
        auto v = h_suite(need_curve(), opt);
        rep.checks.insert(rep.checks.end(), v.begin(), v.end());
    } else if (suite == "pde") {
        auto v = pde_suite(need_curve(), opt);
        rep.checks.insert(rep.checks.end(), v.begin(), v.end());
    } else if (suite == "all") {
        run_alg();
        if (in) {
            for (auto&& v : {periods_suite(*in, opt), h_suite(*in, opt), pde_suite(*in, opt)})
                rep.checks.insert(rep.checks.end(), v.begin(), v.end());
        }
    } else {
        throw ParseError("unknown suite: " + suite);
    }
    for (auto& c : rep.checks) c.tolerance *= tol_scale;
    for (auto& c : rep.checks) c.pass = c.measured <= c.tolerance;

    if (timing)
        rep.timing_sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!report_path.empty()) emit_report(rep, report_path);
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (measured "
                  << c.measured << ", tolerance " << c.tolerance << ")\n";
    std::cout << (rep.all_pass() ? "all checks passed" : "some checks FAILED") << " ("
              << rep.checks.size() << " checks)\n";
    return rep.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Baker functions and the entire function H on hyperelliptic curves with two "
                 "points at infinity"};
    app.require_subcommand(1);

    std::string curve_file, points_file, report_path, out_path;
    std::string suite = "all", precision = "double";
    int genus = 1, order = 20;
    unsigned seed = 1;
    bool symbolic = false, as_json = false, timing = false;
    double tol_scale = 1.0;

    auto* cb = app.add_subcommand("baker", "Baker matrix from the symmetric-product construction");
    cb->add_option("--genus", genus)->check(CLI::Range(1, 3));
    cb->add_flag("--symbolic", symbolic);
    cb->add_option("--curve", curve_file);
    cb->add_option("--points", points_file);
    cb->add_flag("--json", as_json);

    auto* co = app.add_subcommand("omega", "quadratic correction matrix, chi, and kappa forms");
    co->add_option("--genus", genus)->check(CLI::Range(1, 3));
    co->add_flag("--symbolic", symbolic);
    co->add_option("--curve", curve_file);
    co->add_flag("--json", as_json);

    auto* ce = app.add_subcommand("expand", "genus-1 power series of H");
    ce->add_option("--genus", genus)->check(CLI::Range(1, 1));
    ce->add_flag("--symbolic", symbolic);
    ce->add_option("--curve", curve_file);
    ce->add_option("--order", order)->check(CLI::Range(1, 40));
    ce->add_flag("--json", as_json);

    auto* cp = app.add_subcommand("periods", "period matrices and theta data");
    cp->add_option("--curve", curve_file)->required();
    cp->add_option("--precision", precision)->check(CLI::IsMember({"double", "extended"}));
    cp->add_option("--seed", seed);
    cp->add_option("--out", out_path);

    auto* cv = app.add_subcommand("verify", "run a verification suite");
    cv->add_option("--curve", curve_file);
    cv->add_option("--genus", genus)->check(CLI::Range(1, 3));
    cv->add_flag("--symbolic", symbolic);
    cv->add_option("--suite", suite)
        ->check(CLI::IsMember({"algebraic", "periods", "h-identities", "pde", "all"}));
    cv->add_option("--seed", seed);
    cv->add_option("--precision", precision)->check(CLI::IsMember({"double", "extended"}));
    cv->add_option("--report", report_path);
    cv->add_flag("--timing", timing);
    cv->add_option("--tolerance-scale", tol_scale, "scale every tolerance (diagnostics)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (cb->parsed()) return cmd_baker(genus, symbolic, curve_file, points_file, as_json);
        if (co->parsed()) return cmd_omega(genus, symbolic, curve_file, as_json);
        if (ce->parsed()) return cmd_expand(genus, symbolic, curve_file, order, as_json);
        if (cp->parsed()) {
            CurveInput in = load_curve_file(curve_file);
            if (precision == "extended")
                return cmd_periods_impl<QuadPrec>(in, seed, out_path);
            return cmd_periods_impl<DoublePrec>(in, seed, out_path);
        }
        if (cv->parsed())
            return cmd_verify(curve_file, genus, symbolic, suite, seed, precision, report_path,
                              timing, tol_scale);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const CurveError& e) {
        std::cerr << "curve error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitConfig;
}
