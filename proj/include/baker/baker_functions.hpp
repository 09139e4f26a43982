// The Baker construction on the g-th symmetric product of the curve: the
// interpolation kernel nabla, the polynomials f and F, the exact division by
// (e1-e2)^2 R(e1) R(e2), and the matrix of functions P_{2g+2-2i,2g+2-2j} read
// off from G. Everything is cleared by Pi^2 = prod_i R'(x_i)^2 so that all
// intermediates are honest polynomials; y_i^2 is reduced eagerly to N(x_i).
#ifndef BAKER_BAKER_FUNCTIONS_HPP
#define BAKER_BAKER_FUNCTIONS_HPP

#include <complex>

#include "baker/curve.hpp"

namespace baker {

struct BakerError : std::runtime_error {
    enum Kind { DegenerateDivisor, NonDivisible, PoleAtDivisor };
    Kind kind;
    BakerError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// g points on the curve; xs entries are either the variables x1..xg or bound
// rationals, ys are always the variables y1..yg subject to y_i^2 = N(x_i)
struct Divisor {
    std::vector<MultiPoly> xs;
    static Divisor symbolic(int g);
    // checks pairwise-distinct x values and x_i != a on concrete contexts
    static Divisor concrete(const CurveCtx& ctx, const std::vector<Rational>& xvals);
};

// f(e1,e2) = sum_{i=0}^{g+1} e1^i e2^i { 2 nu_{4g+4-4i} + nu_{4g+2-4i} (e1+e2) },
// with nu_{-2} = 0
MultiPoly build_f(const CurveCtx& ctx);

// R evaluated at an argument polynomial: (arg-a) prod_i (arg-x_i)
MultiPoly R_of(const CurveCtx& ctx, const Divisor& d, const MultiPoly& arg);
// R'(x_i) = (x_i-a) prod_{k != i} (x_i-x_k)
MultiPoly Rprime_at(const CurveCtx& ctx, const Divisor& d, int i);

struct ClearedF {
    MultiPoly Fhat;  // F * Pi^2, y-reduced
    MultiPoly Pi;    // prod_i R'(x_i)
};

ClearedF build_F(const CurveCtx& ctx, const Divisor& d);

// Ghat = Fhat / ((e1-e2)^2 R(e1) R(e2)); the true G equals Ghat / Pi^2.
// Throws BakerError(NonDivisible) when the division leaves a remainder.
MultiPoly divide_G(const CurveCtx& ctx, const Divisor& d, const MultiPoly& Fhat);

struct BakerMatrixX {
    int g = 1;
    MultiPoly Pi;                               // clearing factor
    std::vector<std::vector<MultiPoly>> Phat;   // Phat[i-1][j-1] * Pi^{-2} = P_{2g+2-2i,2g+2-2j}
    RatFunc entry(int i, int j) const {         // 1-based; common Pi factors divided out
        MultiPoly num = Phat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        MultiPoly den = Pi * Pi;
        for (int k = 0; k < 2; ++k) {
            auto q = exact_divide(num, Pi);
            if (!q) break;
            num = *q;
            auto qd = exact_divide(den, Pi);
            den = *qd;
        }
        return RatFunc(num, den);
    }
};

BakerMatrixX baker_matrix(const CurveCtx& ctx, const Divisor& d);

// numeric instantiation at a concrete divisor; pts are (x, y) pairs on the
// curve. The matrix must have been built over a symbolic divisor.
template <class C>
std::vector<std::vector<C>> baker_evaluate(const BakerMatrixX& bm, const CurveSpec& spec,
                                           const std::vector<std::pair<C, C>>& pts) {
    int g = bm.g;
    if (static_cast<int>(pts.size()) != g)
        throw BakerError(BakerError::DegenerateDivisor, "wrong number of points");
    std::map<std::string, C> env;
    env["a"] = rat_to<C>(spec.a);
    for (int i = 0; i <= 2 * g + 2; ++i)
        env["nu" + std::to_string(2 * i)] = rat_to<C>(spec.nu[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= g; ++i) {
        env["x" + std::to_string(i)] = pts[static_cast<std::size_t>(i - 1)].first;
        env["y" + std::to_string(i)] = pts[static_cast<std::size_t>(i - 1)].second;
    }
    C pi2 = (bm.Pi * bm.Pi).eval(env);
    using std::abs;
    if (!(abs(pi2) > 0))
        throw BakerError(BakerError::DegenerateDivisor, "divisor in degenerate position");
    std::vector<std::vector<C>> out(static_cast<std::size_t>(g),
                                    std::vector<C>(static_cast<std::size_t>(g)));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                bm.Phat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(env) / pi2;
    return out;
}

}  // namespace baker

#endif
