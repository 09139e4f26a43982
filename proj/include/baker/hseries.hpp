// Genus-1 exact power series of the entire function H around the origin:
// H(v2) = chi exp(n_{1,1} v2^2 / 2) sigma(D v2), composed through the exact
// genus-1 sigma series. The scaling pair is eliminated analytically (every
// sigma coefficient of u^n is homogeneous of weight n-1 in the transformed
// curve coefficients, which pins its s-power), so the output coefficients
// live in Q[a, nu] up to powers of N'(a).
#ifndef BAKER_HSERIES_HPP
#define BAKER_HSERIES_HPP

#include <optional>
#include <utility>

#include "baker/curve.hpp"
#include "baker/omega.hpp"
#include "baker/series.hpp"

namespace baker {

struct HSeriesError : std::runtime_error {
    enum Kind { ScalingResidue, NotGenusOne };
    Kind kind;
    HSeriesError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct HSeriesG1 {
    int cutoff = 0;
    std::vector<RatFunc> xi;  // xi[n] multiplies v2^n
};

// scaling-eliminated route; works for symbolic and concrete contexts
HSeriesG1 h_series_genus1(const CurveCtx& ctx, int cutoff);

// route through an explicit exact scaling pair (cross-check; rationals only)
HSeriesG1 h_series_genus1_scaled(const CurveCtx& ctx, const Rational& k, int cutoff);

// write xi as N'(a)^{-m} r with r polynomial; nullopt when xi is not of that
// shape
std::optional<std::pair<MultiPoly, int>> r_ring_form(const RatFunc& xi, const MultiPoly& nprime);

}  // namespace baker

#endif
