// Sparse multivariate polynomials and rational functions over exact
// rationals. Monomials are kept in graded-lexicographic order (total degree
// first, then lexicographic in the fixed variable order), descending, so the
// leading term is always the first map entry. Variable lists are ordered by a
// "natural" name comparison in which trailing integers compare numerically
// (nu2 < nu4 < nu16); binary operations union the variable lists of their
// operands automatically.
#ifndef BAKER_MULTIPOLY_HPP
#define BAKER_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "baker/rational.hpp"

namespace baker {

// numeric-suffix-aware name order; defines the monomial order per context
bool var_less(const std::string& a, const std::string& b);

using Expo = std::vector<int>;

struct GradedLexDesc {
    bool operator()(const Expo& a, const Expo& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

class WeightTable {
public:
    WeightTable() = default;
    WeightTable& set(const std::string& v, long w) {
        w_[v] = w;
        return *this;
    }
    std::optional<long> weight(const std::string& v) const {
        auto it = w_.find(v);
        if (it == w_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::map<std::string, long> w_;
};

class MultiPoly {
public:
    using TermMap = std::map<Expo, Rational, GradedLexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly var(const std::string& name, int power = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator-(const MultiPoly& a) { return a * Rational(-1); }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(int e) const;
    MultiPoly derivative(const std::string& v, int order = 1) const;

    long degree_in(const std::string& v) const;      // -1 for the zero poly
    long total_degree() const;                       // -1 for the zero poly
    MultiPoly coeff_of(const std::string& v, int k) const;
    // coefficient of a full monomial in the named variables, other vars must
    // not appear in the matching terms
    Rational scalar_coeff(const std::vector<std::pair<std::string, int>>& mono) const;

    bool depends_on(const std::string& v) const;

    // common graded weight of all terms, or nullopt listing nothing; the
    // offending term (if any) is written to *offender when non-homogeneous
    std::optional<long> graded_weight(const WeightTable& w, std::string* offender = nullptr) const;

    template <class C>
    C eval(const std::map<std::string, C>& point) const;

    std::string str() const;  // canonical text form

    // internal-ish helpers used by the division/substitution routines
    void add_term(const Expo& e, const Rational& c);  // in current variable frame
    MultiPoly aligned_to(const std::vector<std::string>& target_vars) const;
    static std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b);

private:
    std::vector<std::string> vars_;  // sorted by var_less
    TermMap terms_;
    void prune();
};

// quotient if den divides num exactly, nullopt otherwise (remainder at the
// failing step is written to *rem when given)
std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den,
                                      MultiPoly* rem = nullptr);

struct RatFunc {
    MultiPoly num;
    MultiPoly den;  // never zero; normalized: leading coefficient 1

    RatFunc() : num(), den(Rational(1)) {}
    explicit RatFunc(const MultiPoly& n) : num(n), den(MultiPoly(Rational(1))) {}
    explicit RatFunc(const Rational& c) : num(c), den(MultiPoly(Rational(1))) {}
    RatFunc(const MultiPoly& n, const MultiPoly& d);

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.is_constant(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc pow(int e) const;

    // exact equality as rational functions (cross multiplication)
    bool equals(const RatFunc& o) const;

    // divide out the common factor when the denominator divides the numerator
    RatFunc reduced() const;

    std::optional<long> graded_weight(const WeightTable& w) const;

    template <class C>
    C eval(const std::map<std::string, C>& point) const;

    std::string str() const;
};

// substitution of rational functions for variables; unbound variables pass
// through unchanged
RatFunc substitute(const MultiPoly& p, const std::map<std::string, RatFunc>& bind);
RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bind);

// ---- templates ----

template <class C>
C MultiPoly::eval(const std::map<std::string, C>& point) const {
    std::vector<C> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) {
            if (depends_on(v)) throw std::invalid_argument("eval: unbound variable " + v);
            vals.push_back(C(0));
            continue;
        }
        vals.push_back(it->second);
    }
    C acc(0);
    for (const auto& [e, c] : terms_) {
        C t = rat_to<C>(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= vals[i];
        acc += t;
    }
    return acc;
}

template <class C>
C RatFunc::eval(const std::map<std::string, C>& point) const {
    C d = den.eval(point);
    if (d == C(0)) throw std::domain_error("RatFunc::eval: denominator vanishes");
    return num.eval(point) / d;
}

}  // namespace baker

#endif
