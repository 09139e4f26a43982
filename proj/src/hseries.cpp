#include "baker/hseries.hpp"

namespace baker {

HSeriesG1 h_series_genus1(const CurveCtx& ctx, int cutoff) {
    if (ctx.g != 1) throw HSeriesError(HSeriesError::NotGenusOne, "h_series_genus1: g must be 1");
    MultiPoly l2 = MultiPoly::var("lam2"), l4 = MultiPoly::var("lam4"),
              l6 = MultiPoly::var("lam6");
    USeries<MultiPoly> gam = genus1_sigma_series<MultiPoly>(l2, l4, l6, cutoff);

    WeightTable lw;
    lw.set("lam2", 2).set("lam4", 4).set("lam6", 6);
    MultiPoly nprime = ctx.N_deriv_at_a(1);
    RatFunc np(nprime);
    std::map<std::string, RatFunc> bind;
    for (int i = 1; i <= 3; ++i)
        bind["lam" + std::to_string(2 * i)] = RatFunc(ctx.taylor_at_a(i + 1)) / np;

    // sigma part: chi D^n gamma_n(lt) = N'(a)^{(n-1)/2} gamma_n(c)
    USeries<RatFunc> sig(cutoff);
    for (int n = 0; n <= cutoff; ++n) {
        const MultiPoly& gn = gam[n];
        if (gn.is_zero()) continue;
        auto w = gn.graded_weight(lw);
        if (!w || *w != n - 1 || (n % 2) == 0)
            throw HSeriesError(HSeriesError::ScalingResidue,
                               "sigma coefficient of u^" + std::to_string(n) +
                                   " is not homogeneous of weight n-1");
        sig[n] = (substitute(gn, bind) * RatFunc(nprime.pow((n - 1) / 2))).reduced();
    }

    OmegaMatrixX om = omega_recursion(ctx);
    USeries<RatFunc> quad(cutoff);
    if (cutoff >= 2) quad[2] = RatFunc(om.at(1, 1)) * RatFunc(rat_of(1, 2));
    USeries<RatFunc> h = series_exp(quad) * sig;

    HSeriesG1 out;
    out.cutoff = cutoff;
    out.xi.resize(static_cast<std::size_t>(cutoff) + 1);
    for (int n = 0; n <= cutoff; ++n) out.xi[static_cast<std::size_t>(n)] = h[n].reduced();
    return out;
}

HSeriesG1 h_series_genus1_scaled(const CurveCtx& ctx, const Rational& k, int cutoff) {
    if (ctx.g != 1) throw HSeriesError(HSeriesError::NotGenusOne, "h_series_genus1: g must be 1");
    if (ctx.is_symbolic)
        throw HSeriesError(HSeriesError::NotGenusOne, "scaled route needs a concrete curve");
    ScaledModelX m = ScaledModelX::exact_family(ctx, k);
    auto as_rat = [](const RatFunc& f) -> Rational {
        RatFunc r = f.reduced();
        if (!r.num.is_constant() || !r.den.is_constant())
            throw HSeriesError(HSeriesError::ScalingResidue, "non-constant scaling data");
        return r.num.constant_value() / r.den.constant_value();
    };
    Rational l2 = as_rat(m.lambda_tilde(1)), l4 = as_rat(m.lambda_tilde(2)),
             l6 = as_rat(m.lambda_tilde(3));
    USeries<Rational> gam = genus1_sigma_series<Rational>(l2, l4, l6, cutoff);
    Rational chi = as_rat(m.chi());
    Rational D = as_rat(m.d_entry(1, 1));

    USeries<Rational> sig(cutoff);
    Rational dn(1);
    for (int n = 0; n <= cutoff; ++n) {
        sig[n] = chi * gam[n] * dn;
        dn *= D;
    }
    OmegaMatrixX om = omega_recursion(ctx);
    if (!om.at(1, 1).is_constant())
        throw HSeriesError(HSeriesError::ScalingResidue, "omega entry not constant");
    USeries<Rational> quad(cutoff);
    if (cutoff >= 2) quad[2] = om.at(1, 1).constant_value() / 2;
    USeries<Rational> h = series_exp(quad) * sig;

    HSeriesG1 out;
    out.cutoff = cutoff;
    out.xi.resize(static_cast<std::size_t>(cutoff) + 1);
    for (int n = 0; n <= cutoff; ++n)
        out.xi[static_cast<std::size_t>(n)] = RatFunc(MultiPoly(h[n]));
    return out;
}

std::optional<std::pair<MultiPoly, int>> r_ring_form(const RatFunc& xi, const MultiPoly& nprime) {
    RatFunc r = xi.reduced();
    if (r.is_polynomial()) return std::make_pair(r.reduced().num, 0);
    // strip powers of N'(a) from the denominator
    MultiPoly den = r.den;
    int m = 0;
    while (!den.is_constant()) {
        auto q = exact_divide(den, nprime);
        if (!q) return std::nullopt;
        den = *q;
        ++m;
    }
    Rational c = den.constant_value();
    MultiPoly num = r.num;
    num *= Rational(1) / c;
    return std::make_pair(num, m);
}

}  // namespace baker
