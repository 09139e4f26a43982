// Curve model: the genus-g curve y^2 = N(x) with marked branch point a, the
// scaling pair (s, t) with s^{2g+1}/t^2 = N'(a), the transformed curve, the
// matrix D, and the differential catalogs of both curves. Everything here is
// exact; a and the nu coefficients may be indeterminates (symbolic context,
// identities proved for all curves of a genus) or bound rationals.
#ifndef BAKER_CURVE_HPP
#define BAKER_CURVE_HPP

#include <vector>

#include "baker/multipoly.hpp"

namespace baker {

struct CurveError : std::runtime_error {
    enum Kind { Nu0Zero, MultipleRoots, NotABranchPoint, BadInput };
    Kind kind;
    CurveError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// concrete curve with exact rational data
struct CurveSpec {
    int g = 1;
    std::vector<Rational> nu;  // nu0, nu2, ..., nu_{4g+4} (2g+3 entries)
    Rational a;
};

// checks nu0 != 0, N square-free, N(a) = 0; throws CurveError
CurveSpec validate_curve(int g, const std::vector<Rational>& nu, const Rational& a);

// univariate helpers over exact rationals (coefficients must be constants)
MultiPoly univar_rem(const MultiPoly& p, const MultiPoly& q, const std::string& v);
MultiPoly univar_gcd(MultiPoly p, MultiPoly q, const std::string& v);

// Exact curve context: genus plus N(x) data with a and nu either variables
// ("a", "nu0", "nu2", ...) or rational constants.
class CurveCtx {
public:
    static CurveCtx symbolic(int g);
    static CurveCtx concrete(const CurveSpec& spec);

    int g = 1;
    bool is_symbolic = false;
    MultiPoly a;
    std::vector<MultiPoly> nu;  // 2g+3 entries, indices 0..2g+2 mean nu_{2i}

    MultiPoly N_of(const MultiPoly& arg) const;  // N evaluated at a polynomial
    MultiPoly N_poly() const;                    // N(x) in variable "x"
    // k-th derivative of N evaluated at a, exact polynomial in (a, nu)
    MultiPoly N_deriv_at_a(int k) const;
    // Taylor coefficient N^{(k)}(a)/k!
    MultiPoly taylor_at_a(int k) const;

    // the paper's weight grading for this genus (x, y, a, e_i, x_i, y_i, nu,
    // s, t, u_i, v_i)
    WeightTable weights() const;
};

// Scaling pair (s, t); entries are rational functions in (a, nu) for the
// exact family s = k^2 N'(a), t = k^{2g+1} N'(a)^g, or free variables "s","t"
// for identities that hold for any admissible pair.
class ScaledModelX {
public:
    // s, t as free symbols (no constraint imposed)
    static ScaledModelX generic(const CurveCtx& ctx);
    // exact admissible pair parametrized by rational k != 0
    static ScaledModelX exact_family(const CurveCtx& ctx, const Rational& k);

    CurveCtx ctx;
    RatFunc s, t;
    bool constraint_holds = false;  // s^{2g+1}/t^2 == N'(a) identically

    // lambda-tilde_{2i} = s^i N^{(i+1)}(a) / ((i+1)! N'(a)), 0 <= i <= 2g+1
    RatFunc lambda_tilde(int i) const;
    std::vector<RatFunc> lambda_tilde_all() const;

    // D_{ij} = t^{-1} s^{g+1-i} binom(i-1,j-1) (-a)^{i-j} for j <= i, else 0
    RatFunc d_entry(int i, int j) const;  // 1-based
    std::vector<std::vector<RatFunc>> d_matrix() const;

    // chi = s^{(g^2-3g-2)/4} t when g(g+1)/2 odd, else s^{g(g+1)/4}
    RatFunc chi() const;

    // coefficients lambda-tilde of the transformed curve's defining polynomial
    // M~(X) = sum_i lt_{2i} X^{2g+1-i}; lt_0 = 1
    // (accessed through lambda_tilde)
};

// ---- differential forms, represented as (rational function) * dx ----

struct FormOnCurve {
    RatFunc density;  // multiplies dx (or dX on the transformed curve)
};

// on V: mu_i = x^{i-1}/(2y) dx
FormOnCurve mu_form(int i);
// on the transformed curve: omega_i = -X^{g-i}/(2Y) dX
FormOnCurve omega_form(const ScaledModelX& m, int i);
// on the transformed curve: eta_i per the second-kind catalog, using the
// model's lambda-tilde coefficients (lambda_tilde_0 = 1)
FormOnCurve eta_form(const ScaledModelX& m, int i);

// pullback through zeta: X -> s/(x-a), Y -> t y/(x-a)^{g+1}, times dX/dx
FormOnCurve zeta_pullback(const ScaledModelX& m, const FormOnCurve& form_on_C);

// zeta as a point map; symbolic identity Y^2 - M~(X) == 0 modulo y^2 = N(x)
// is exercised in tests via zeta_curve_residual
RatFunc zeta_curve_residual(const ScaledModelX& m);

// reduce powers y^k (k >= 2) using y^2 = N(x); result has y-degree <= 1
MultiPoly reduce_y(const CurveCtx& ctx, const MultiPoly& p, const std::string& yvar = "y",
                   const std::string& xvar = "x");

}  // namespace baker

#endif
