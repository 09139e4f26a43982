#include "baker/baker_functions.hpp"

namespace baker {

namespace {
MultiPoly E1(int k = 1) { return MultiPoly::var("e1", k); }
MultiPoly E2(int k = 1) { return MultiPoly::var("e2", k); }

MultiPoly reduce_divisor_y(const CurveCtx& ctx, const Divisor& d, MultiPoly p) {
    for (std::size_t i = 0; i < d.xs.size(); ++i) {
        std::string yv = "y" + std::to_string(i + 1);
        long dy = p.degree_in(yv);
        if (dy <= 1) continue;
        MultiPoly Nxi = ctx.N_of(d.xs[i]);
        MultiPoly out;
        for (long k = 0; k <= dy; ++k) {
            MultiPoly ck = p.coeff_of(yv, static_cast<int>(k));
            if (ck.is_zero()) continue;
            MultiPoly t = ck * Nxi.pow(static_cast<int>(k / 2));
            if (k % 2) t *= MultiPoly::var(yv);
            out += t;
        }
        p = std::move(out);
    }
    return p;
}
}  // namespace

Divisor Divisor::symbolic(int g) {
    Divisor d;
    d.xs.reserve(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) d.xs.push_back(MultiPoly::var("x" + std::to_string(i)));
    return d;
}

Divisor Divisor::concrete(const CurveCtx& ctx, const std::vector<Rational>& xvals) {
    Divisor d;
    for (std::size_t i = 0; i < xvals.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k)
            if (xvals[i] == xvals[k])
                throw BakerError(BakerError::DegenerateDivisor, "repeated x-coordinate");
        if (!ctx.is_symbolic && ctx.a.is_constant() && ctx.a.constant_value() == xvals[i])
            throw BakerError(BakerError::DegenerateDivisor, "divisor point at the base point");
        d.xs.push_back(MultiPoly(xvals[i]));
    }
    return d;
}

MultiPoly build_f(const CurveCtx& ctx) {
    int g = ctx.g;
    auto nu_at = [&](int idx2) -> MultiPoly {  // nu_{idx2}, with nu_{-2} = 0
        if (idx2 < 0) return MultiPoly();
        return ctx.nu[static_cast<std::size_t>(idx2 / 2)];
    };
    MultiPoly f;
    for (int i = 0; i <= g + 1; ++i) {
        MultiPoly block = nu_at(4 * g + 4 - 4 * i) * Rational(2);
        block += nu_at(4 * g + 2 - 4 * i) * (E1() + E2());
        f += E1(i) * E2(i) * block;
    }
    return f;
}

MultiPoly R_of(const CurveCtx& ctx, const Divisor& d, const MultiPoly& arg) {
    MultiPoly r = arg - ctx.a;
    for (const auto& xi : d.xs) r *= arg - xi;
    return r;
}

MultiPoly Rprime_at(const CurveCtx& ctx, const Divisor& d, int i) {
    MultiPoly r = d.xs[static_cast<std::size_t>(i - 1)] - ctx.a;
    for (int k = 1; k <= static_cast<int>(d.xs.size()); ++k) {
        if (k == i) continue;
        r *= d.xs[static_cast<std::size_t>(i - 1)] - d.xs[static_cast<std::size_t>(k - 1)];
    }
    return r;
}

ClearedF build_F(const CurveCtx& ctx, const Divisor& d) {
    int g = ctx.g;
    MultiPoly Pi(Rational(1));
    std::vector<MultiPoly> rp(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) {
        rp[static_cast<std::size_t>(i - 1)] = Rprime_at(ctx, d, i);
        if (rp[static_cast<std::size_t>(i - 1)].is_zero())
            throw BakerError(BakerError::DegenerateDivisor, "R'(x_i) = 0");
        Pi *= rp[static_cast<std::size_t>(i - 1)];
    }
    // Num = sum_i y_i prod_{k != i} (e1-x_k)(e2-x_k) R'(x_k);
    // nabla = Num / (prod_k (e1-x_k)(e2-x_k) Pi), so
    // R(e1)^2 R(e2)^2 nabla^2 = (e1-a)^2 (e2-a)^2 Num^2 / Pi^2
    MultiPoly Num;
    for (int i = 1; i <= g; ++i) {
        MultiPoly t = MultiPoly::var("y" + std::to_string(i));
        for (int k = 1; k <= g; ++k) {
            if (k == i) continue;
            const MultiPoly& xk = d.xs[static_cast<std::size_t>(k - 1)];
            t *= (E1() - xk) * (E2() - xk);
            t *= rp[static_cast<std::size_t>(k - 1)];
        }
        Num += t;
    }
    MultiPoly R1 = R_of(ctx, d, E1());
    MultiPoly R2 = R_of(ctx, d, E2());
    MultiPoly e1a = E1() - ctx.a, e2a = E2() - ctx.a;
    MultiPoly d12 = E1() - E2();
    MultiPoly Pi2 = Pi * Pi;

    MultiPoly Fhat = build_f(ctx) * R1 * R2 * Pi2;
    Fhat += d12 * d12 * e1a * e1a * e2a * e2a * reduce_divisor_y(ctx, d, Num * Num);
    Fhat -= (ctx.N_of(E1()) * R2 * R2 + ctx.N_of(E2()) * R1 * R1) * Pi2;
    return {Fhat, Pi};
}

MultiPoly divide_G(const CurveCtx& ctx, const Divisor& d, const MultiPoly& Fhat) {
    // divide sequentially by the linear factors of (e1-e2)^2 R(e1) R(e2)
    std::vector<MultiPoly> factors;
    factors.push_back(E1() - E2());
    factors.push_back(E1() - E2());
    factors.push_back(E1() - ctx.a);
    for (const auto& xi : d.xs) factors.push_back(E1() - xi);
    factors.push_back(E2() - ctx.a);
    for (const auto& xi : d.xs) factors.push_back(E2() - xi);

    MultiPoly cur = Fhat;
    for (const auto& fct : factors) {
        MultiPoly rem;
        auto q = exact_divide(cur, fct, &rem);
        if (!q) throw BakerError(BakerError::NonDivisible, "F not divisible by " + fct.str());
        cur = std::move(*q);
    }
    return cur;
}

BakerMatrixX baker_matrix(const CurveCtx& ctx, const Divisor& d) {
    int g = ctx.g;
    ClearedF cf = build_F(ctx, d);
    MultiPoly Ghat = divide_G(ctx, d, cf.Fhat);
    BakerMatrixX bm;
    bm.g = g;
    bm.Pi = cf.Pi;
    bm.Phat.assign(static_cast<std::size_t>(g), std::vector<MultiPoly>(static_cast<std::size_t>(g)));
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            bm.Phat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                Ghat.coeff_of("e1", i - 1).coeff_of("e2", j - 1);
    return bm;
}

}  // namespace baker
