#include "baker/omega.hpp"

#include "baker/baker_functions.hpp"

namespace baker {

namespace {
MultiPoly E1(int k = 1) { return MultiPoly::var("e1", k); }
MultiPoly E2(int k = 1) { return MultiPoly::var("e2", k); }

MultiPoly neg_a_pow(const CurveCtx& ctx, int k) { return (-ctx.a).pow(k); }
}  // namespace

MultiPoly f_bar(const CurveCtx& ctx) {
    // t^{-2} lt_{4g+2-4k} s^{2k} = Tay(2g+2-2k) and
    // t^{-2} lt_{4g-4k} s^{2k+1} = Tay(2g+1-2k), Tay(m) = N^{(m)}(a)/m!
    int g = ctx.g;
    MultiPoly e1a = E1() - ctx.a, e2a = E2() - ctx.a;
    MultiPoly acc;
    for (int k = 0; k <= g; ++k) {
        MultiPoly even_c = ctx.taylor_at_a(2 * g + 2 - 2 * k);
        acc += even_c * Rational(2) * e1a.pow(g + 1 - k) * e2a.pow(g + 1 - k);
        MultiPoly odd_c = ctx.taylor_at_a(2 * g + 1 - 2 * k);
        acc += odd_c * (e1a.pow(g - k) * e2a.pow(g + 1 - k) + e1a.pow(g + 1 - k) * e2a.pow(g - k));
    }
    return acc;
}

RatFunc f_bar_subst(const ScaledModelX& m) {
    int g = m.ctx.g;
    // ftilde as a polynomial in placeholder variables, then one substitution
    // with a shared common denominator
    MultiPoly ftp;
    auto lamvar = [](int i) { return MultiPoly::var("lam" + std::to_string(2 * i)); };
    MultiPoly B1 = MultiPoly::var("E1"), B2 = MultiPoly::var("E2");
    for (int i = 0; i <= g; ++i) {
        MultiPoly block = ((2 * g + 1 - 2 * i) == 0 ? MultiPoly(Rational(1))
                                                    : lamvar(2 * g + 1 - 2 * i)) *
                          Rational(2);
        block += ((2 * g - 2 * i) == 0 ? MultiPoly(Rational(1)) : lamvar(2 * g - 2 * i)) *
                 (B1 + B2);
        ftp += B1.pow(i) * B2.pow(i) * block;
    }
    std::map<std::string, RatFunc> bind;
    bind["E1"] = m.s / RatFunc(E1() - m.ctx.a);
    bind["E2"] = m.s / RatFunc(E2() - m.ctx.a);
    for (int i = 1; i <= 2 * g + 1; ++i) bind["lam" + std::to_string(2 * i)] = m.lambda_tilde(i);
    RatFunc ft = substitute(ftp, bind);
    RatFunc pref = RatFunc((E1() - m.ctx.a).pow(g + 1) * (E2() - m.ctx.a).pow(g + 1)) /
                   (m.t * m.t);
    return pref * ft;
}

NTildeTable n_tilde(const CurveCtx& ctx) {
    int g = ctx.g;
    MultiPoly fb = f_bar(ctx);
    NTildeTable tab;
    tab.g = g;
    tab.nt.assign(static_cast<std::size_t>(g + 2),
                  std::vector<MultiPoly>(static_cast<std::size_t>(g + 2)));
    for (int i = 1; i <= g + 2; ++i)
        for (int j = 1; j <= g + 2; ++j)
            tab.nt[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                fb.coeff_of("e1", i - 1).coeff_of("e2", j - 1);

    // closed-form cross-check on 1 <= j <= i <= g
    for (int i = 1; i <= g; ++i) {
        for (int j = 1; j <= i; ++j) {
            MultiPoly cf;
            for (int k = 0; k <= g - i; ++k) {
                cf += ctx.taylor_at_a(2 * g + 2 - 2 * k) * Rational(2) *
                      MultiPoly(binomial(g + 1 - k, i + 1)) *
                      MultiPoly(binomial(g + 1 - k, j - 1)) *
                      neg_a_pow(ctx, 2 * g + 2 - 2 * k - i - j);
            }
            for (int k = 0; k <= g - i - 1; ++k) {
                cf += ctx.taylor_at_a(2 * g + 1 - 2 * k) * MultiPoly(binomial(g - k, i + 1)) *
                      MultiPoly(binomial(g + 1 - k, j - 1)) *
                      neg_a_pow(ctx, 2 * g + 1 - 2 * k - i - j);
            }
            for (int k = 0; k <= g - i; ++k) {
                cf += ctx.taylor_at_a(2 * g + 1 - 2 * k) * MultiPoly(binomial(g + 1 - k, i + 1)) *
                      MultiPoly(binomial(g - k, j - 1)) *
                      neg_a_pow(ctx, 2 * g + 1 - 2 * k - i - j);
            }
            if (!(cf == tab.at(i + 2, j)))
                throw OmegaError(OmegaError::ClosedFormMismatch,
                                 "n_tilde closed form disagrees at (" + std::to_string(i + 2) +
                                     "," + std::to_string(j) + ")");
        }
    }
    return tab;
}

OmegaMatrixX omega_recursion(const CurveCtx& ctx) {
    int g = ctx.g;
    NTildeTable tab = n_tilde(ctx);
    OmegaMatrixX om;
    om.g = g;
    om.n.assign(static_cast<std::size_t>(g), std::vector<MultiPoly>(static_cast<std::size_t>(g)));
    auto n_at = [&](int i, int j) -> MultiPoly {
        if (i < 1 || i > g || j < 1 || j > g) return MultiPoly();
        return om.n[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    };
    // column j = 1 first, then increasing j (the inductive fill order)
    for (int j = 1; j <= g; ++j)
        for (int i = j; i <= g; ++i) {
            MultiPoly v = n_at(i + 1, j - 1) * Rational(2) - n_at(i + 2, j - 2) + tab.at(i + 2, j);
            om.n[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
            om.n[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
        }

    // master identity: f_bar - f = (e1-e2)^2 sum n_{ij} e1^{i-1} e2^{j-1}
    MultiPoly quad;
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j) quad += om.at(i, j) * E1(i - 1) * E2(j - 1);
    MultiPoly lhs = f_bar(ctx) - build_f(ctx);
    MultiPoly rhs = (E1() - E2()).pow(2) * quad;
    if (!(lhs == rhs))
        throw OmegaError(OmegaError::ReconstructionFailure,
                         "omega recursion does not reconstruct f_bar - f");
    return om;
}

std::vector<MultiPoly> kappa_numerators(const CurveCtx& ctx, const OmegaMatrixX& om) {
    // kappa_i = { sum_{j>=i} binom(j-1,i-1)(-a)^{j-i} *
    //             sum_{k=g-j+1}^{g+j-1} (k+j-g) Tay(g+j-k) (x-a)^{g-k-1}
    //           - 2 sum_l n_{il} x^{l-1} } dx/(2y); numerator after clearing
    // (x-a)^g. The scaling pair cancels against N'(a) analytically.
    int g = ctx.g;
    MultiPoly x = MultiPoly::var("x");
    MultiPoly xma = x - ctx.a;
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) {
        MultiPoly r;
        for (int j = i; j <= g; ++j) {
            MultiPoly pref = MultiPoly(binomial(j - 1, i - 1)) * neg_a_pow(ctx, j - i);
            for (int k = g - j + 1; k <= g + j - 1; ++k) {
                // (x-a)^{g-k-1} * (x-a)^g = (x-a)^{2g-k-1}, k <= 2g-1
                r += pref * Rational(k + j - g) * ctx.taylor_at_a(g + j - k) *
                     xma.pow(2 * g - k - 1);
            }
        }
        MultiPoly corr;
        for (int l = 1; l <= g; ++l) corr += om.at(i, l) * MultiPoly::var("x", l - 1);
        r -= corr * Rational(2) * xma.pow(g);
        out.push_back(r);
    }
    return out;
}

RatFunc kappa_density_subst(const ScaledModelX& m, const OmegaMatrixX& om, int i) {
    int g = m.ctx.g;
    RatFunc acc;
    for (int j = i; j <= g; ++j)
        acc = acc + m.d_entry(j, i) * zeta_pullback(m, eta_form(m, j)).density;
    MultiPoly twoy = MultiPoly(Rational(2)) * MultiPoly::var("y");
    for (int l = 1; l <= g; ++l)
        acc = acc - RatFunc(om.at(i, l) * Rational(2) * MultiPoly::var("x", l - 1), twoy);
    return acc;
}

}  // namespace baker
