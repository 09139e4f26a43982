// Exact rational scalars backed by GMP, plus small integer helpers used
// throughout the symbolic layer.
#ifndef BAKER_RATIONAL_HPP
#define BAKER_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace baker {

// Always canonical: reduced, denominator > 0 (gmp canonicalizes on construction
// from mpz pairs; string parsing below canonicalizes explicitly).
using Rational = mpq_class;

inline Rational rat_of(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", decimal ("-0.125") and scientific ("2.5e-3") forms,
// all converted exactly.
Rational rat_parse(const std::string& s);

std::string rat_str(const Rational& q);

Rational rat_pow(const Rational& base, long e);

Rational binomial(long n, long k);
Rational factorial_q(long n);

inline double rat_double(const Rational& q) { return q.get_d(); }

// conversion customization point; numeric layers specialize for wide types
template <class C>
struct RatCast {
    static C cast(const Rational& q) { return C(q.get_d()); }
};
template <>
struct RatCast<Rational> {
    static Rational cast(const Rational& q) { return q; }
};

template <class C>
C rat_to(const Rational& q) {
    return RatCast<C>::cast(q);
}

}  // namespace baker

#endif
