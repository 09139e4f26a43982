// Precision policies for the numeric layer. Everything analytic is templated
// on one of these; double is the default and "extended" is IEEE binary128
// (quad) through Boost.Multiprecision.
#ifndef BAKER_PREC_HPP
#define BAKER_PREC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <limits>

#include "baker/rational.hpp"

namespace baker {

struct DoublePrec {
    using Real = double;
    using Complex = std::complex<double>;
    static constexpr const char* name = "double";
};

struct QuadPrec {
    using Real = boost::multiprecision::cpp_bin_float_quad;
    using Complex = boost::multiprecision::cpp_complex_quad;
    static constexpr const char* name = "extended";
};

template <class P>
typename P::Real real_eps() {
    return std::numeric_limits<typename P::Real>::epsilon();
}

template <class P>
typename P::Real pi_v() {
    using std::acos;
    return acos(typename P::Real(-1));
}

inline double to_dbl(double x) { return x; }
inline double to_dbl(const QuadPrec::Real& x) { return static_cast<double>(x); }
inline std::complex<double> to_cd(const std::complex<double>& z) { return z; }
inline std::complex<double> to_cd(const QuadPrec::Complex& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <class P>
typename P::Complex from_cd(const std::complex<double>& z) {
    using R = typename P::Real;
    return typename P::Complex(R(z.real()), R(z.imag()));
}

// exact-to-wide conversions go through decimal strings to keep all bits
template <>
struct RatCast<QuadPrec::Real> {
    static QuadPrec::Real cast(const Rational& q) {
        return QuadPrec::Real(q.get_num().get_str()) / QuadPrec::Real(q.get_den().get_str());
    }
};
template <>
struct RatCast<QuadPrec::Complex> {
    static QuadPrec::Complex cast(const Rational& q) {
        return QuadPrec::Complex(RatCast<QuadPrec::Real>::cast(q), QuadPrec::Real(0));
    }
};

}  // namespace baker

#endif
