// The quadratic-correction layer of the two-point-at-infinity construction:
// f-bar, its coefficient table, the recursion filling the symmetric matrix
// Omega = (n_{i,j}), and the second-kind forms kappa_i on V. The scaling pair
// is eliminated analytically through s^{2g+1}/t^2 = N'(a), so every object
// here lives in Q[a, nu]; the substitution routes with an explicit scaling
// pair are kept alongside as cross-checks.
#ifndef BAKER_OMEGA_HPP
#define BAKER_OMEGA_HPP

#include "baker/curve.hpp"

namespace baker {

struct OmegaError : std::runtime_error {
    enum Kind { ClosedFormMismatch, ReconstructionFailure, SimplificationFailure };
    Kind kind;
    OmegaError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// t-eliminated closed form of f-bar as a polynomial in Q[a, nu][e1, e2];
// symmetric, degree g+1 in each variable
MultiPoly f_bar(const CurveCtx& ctx);

// substitution route t^{-2} (e1-a)^{g+1} (e2-a)^{g+1} ftilde(s/(e1-a), s/(e2-a))
RatFunc f_bar_subst(const ScaledModelX& m);

struct NTildeTable {
    int g = 1;
    std::vector<std::vector<MultiPoly>> nt;  // (g+2) x (g+2), 1-based through at()
    const MultiPoly& at(int i, int j) const {
        return nt[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
};

// coefficient extraction from f_bar, cross-checked against the triple-sum
// closed form on 1 <= j <= i <= g; throws ClosedFormMismatch on disagreement
NTildeTable n_tilde(const CurveCtx& ctx);

struct OmegaMatrixX {
    int g = 1;
    std::vector<std::vector<MultiPoly>> n;  // g x g entries in Q[a, nu]
    const MultiPoly& at(int i, int j) const {
        return n[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
    template <class C>
    std::vector<std::vector<C>> eval(const std::map<std::string, C>& env) const {
        std::vector<std::vector<C>> out(n.size(), std::vector<C>(n.size()));
        for (std::size_t i = 0; i < n.size(); ++i)
            for (std::size_t j = 0; j < n.size(); ++j) out[i][j] = n[i][j].eval(env);
        return out;
    }
};

// fill order: column j=1 via n_{i,1} = nt_{i+2,1}, then increasing j;
// symmetrized and verified against f_bar = f + (e1-e2)^2 sum n_{ij} e1^{i-1}e2^{j-1}
OmegaMatrixX omega_recursion(const CurveCtx& ctx);

// kappa_i = r_i(x) (x-a)^{-g} dx/(2y); returns the numerators r_i in
// Q[a, nu, x], one per 1 <= i <= g
std::vector<MultiPoly> kappa_numerators(const CurveCtx& ctx, const OmegaMatrixX& om);

// generic pullback route (through an explicit scaling pair) for cross-checks
RatFunc kappa_density_subst(const ScaledModelX& m, const OmegaMatrixX& om, int i);

}  // namespace baker

#endif
