#include "baker/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace baker {

bool var_less(const std::string& a, const std::string& b) {
    // natural order: digit runs compare numerically, e.g. nu2 < nu4 < nu16
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        unsigned char ca = a[i], cb = b[j];
        if (std::isdigit(ca) && std::isdigit(cb)) {
            std::size_t i0 = i, j0 = j;
            while (i < a.size() && std::isdigit(static_cast<unsigned char>(a[i]))) ++i;
            while (j < b.size() && std::isdigit(static_cast<unsigned char>(b[j]))) ++j;
            std::string na = a.substr(i0, i - i0), nb = b.substr(j0, j - j0);
            // strip leading zeros
            na.erase(0, na.find_first_not_of('0'));
            nb.erase(0, nb.find_first_not_of('0'));
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
        } else {
            if (ca != cb) return ca < cb;
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Expo{}, c);
}

MultiPoly MultiPoly::var(const std::string& name, int power) {
    MultiPoly p;
    p.vars_ = {name};
    if (power < 0) throw std::invalid_argument("MultiPoly::var: negative power");
    p.terms_.emplace(Expo{power}, Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

std::vector<std::string> MultiPoly::union_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            out.push_back(a[i]);
            ++i;
            ++j;
        } else if (var_less(a[i], b[j])) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

MultiPoly MultiPoly::aligned_to(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(target.begin(), target.end(), vars_[i]);
        if (it == target.end())
            throw std::logic_error("aligned_to: target misses variable " + vars_[i]);
        pos[i] = static_cast<int>(it - target.begin());
    }
    MultiPoly out;
    out.vars_ = target;
    for (const auto& [e, c] : terms_) {
        Expo ne(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

void MultiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) {
        auto u = union_vars(vars_, o.vars_);
        *this = aligned_to(u);
        MultiPoly ob = o.aligned_to(u);
        for (const auto& [e, c] : ob.terms_) add_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_ != o.vars_) {
        auto u = union_vars(vars_, o.vars_);
        *this = aligned_to(u);
        MultiPoly ob = o.aligned_to(u);
        for (const auto& [e, c] : ob.terms_) add_term(e, -c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return MultiPoly();
    auto u = MultiPoly::union_vars(a.vars_, b.vars_);
    MultiPoly A = a.aligned_to(u), B = b.aligned_to(u);
    const MultiPoly& outer = (A.terms_.size() <= B.terms_.size()) ? A : B;
    const MultiPoly& inner = (A.terms_.size() <= B.terms_.size()) ? B : A;
    MultiPoly out;
    out.vars_ = u;
    Expo e(u.size());
    Rational c;
    for (const auto& [ea, ca] : outer.terms_) {
        for (const auto& [eb, cb] : inner.terms_) {
            for (std::size_t i = 0; i < u.size(); ++i) e[i] = ea[i] + eb[i];
            c = ca * cb;
            auto [it, fresh] = out.terms_.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (vars_ == o.vars_) return terms_ == o.terms_;
    auto u = union_vars(vars_, o.vars_);
    return aligned_to(u).terms_ == o.aligned_to(u).terms_;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly acc(Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(const std::string& v, int order) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return MultiPoly();
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly cur = *this;
    for (int o = 0; o < order; ++o) {
        MultiPoly next;
        next.vars_ = cur.vars_;
        for (const auto& [e, c] : cur.terms_) {
            if (e[idx] == 0) continue;
            Expo ne = e;
            ne[idx] -= 1;
            next.add_term(ne, c * Rational(e[idx]));
        }
        cur = std::move(next);
    }
    return cur;
}

long MultiPoly::degree_in(const std::string& v) const {
    if (terms_.empty()) return -1;
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    long d = 0;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, e[idx]);
    return d;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::coeff_of(const std::string& v, int k) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return (k == 0) ? *this : MultiPoly();
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        Expo ne = e;
        ne[idx] = 0;
        out.add_term(ne, c);
    }
    return out;
}

Rational MultiPoly::scalar_coeff(const std::vector<std::pair<std::string, int>>& mono) const {
    Expo want(vars_.size(), 0);
    for (const auto& [name, k] : mono) {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
            if (k != 0) return Rational(0);
            continue;
        }
        want[static_cast<std::size_t>(it - vars_.begin())] = k;
    }
    auto it = terms_.find(want);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::depends_on(const std::string& v) const { return degree_in(v) > 0; }

std::optional<long> MultiPoly::graded_weight(const WeightTable& w, std::string* offender) const {
    if (terms_.empty()) return 0;
    std::vector<long> wv(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto ow = w.weight(vars_[i]);
        if (!ow) throw std::invalid_argument("graded_weight: no weight for " + vars_[i]);
        wv[i] = *ow;
    }
    std::optional<long> common;
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * wv[i];
        if (!common)
            common = s;
        else if (*common != s) {
            if (offender) {
                MultiPoly t;
                t.vars_ = vars_;
                t.terms_.emplace(e, c);
                *offender = t.str();
            }
            return std::nullopt;
        }
    }
    return common;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << vars_[i];
            if (e[i] > 1) mono << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            os << rat_str(ac);
        } else if (ac == 1) {
            os << mono.str();
        } else {
            os << rat_str(ac) << "*" << mono.str();
        }
    }
    return os.str();
}

std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den, MultiPoly* rem) {
    if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    if (num.is_zero()) return MultiPoly();
    auto u = MultiPoly::union_vars(num.vars(), den.vars());
    MultiPoly p = num.aligned_to(u), d = den.aligned_to(u);
    MultiPoly q;
    q = q.aligned_to(u);
    const auto& dlt = *d.terms().begin();
    while (!p.is_zero()) {
        const auto& plt = *p.terms().begin();
        Expo te(u.size());
        bool ok = true;
        for (std::size_t i = 0; i < u.size(); ++i) {
            te[i] = plt.first[i] - dlt.first[i];
            if (te[i] < 0) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            if (rem) *rem = p;
            return std::nullopt;
        }
        Rational tc = plt.second / dlt.second;
        q.add_term(te, tc);
        // p -= t * d
        MultiPoly sub;
        sub = sub.aligned_to(u);
        Expo e(u.size());
        for (const auto& [ed, cd] : d.terms()) {
            for (std::size_t i = 0; i < u.size(); ++i) e[i] = te[i] + ed[i];
            sub.add_term(e, tc * cd);
        }
        p -= sub;
    }
    return q;
}

RatFunc::RatFunc(const MultiPoly& n, const MultiPoly& d) : num(n), den(d) {
    if (den.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    const Rational lc = den.terms().begin()->second;
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num *= inv;
        den *= inv;
    }
    if (num.is_zero()) den = MultiPoly(Rational(1));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den == o.den) return RatFunc(num + o.num, den);
    return RatFunc(num * o.den + o.num * den, den * o.den);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den == o.den) return RatFunc(num - o.num, den);
    return RatFunc(num * o.den - o.num * den, den * o.den);
}
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num.is_zero()) throw std::domain_error("RatFunc: division by zero function");
    return RatFunc(num * o.den, den * o.num);
}
RatFunc RatFunc::operator-() const { return RatFunc(-num, den); }

RatFunc RatFunc::pow(int e) const {
    if (e < 0) {
        if (num.is_zero()) throw std::domain_error("RatFunc::pow: zero to negative power");
        return RatFunc(den.pow(-e), num.pow(-e));
    }
    return RatFunc(num.pow(e), den.pow(e));
}

bool RatFunc::equals(const RatFunc& o) const { return num * o.den == o.num * den; }

RatFunc RatFunc::reduced() const {
    if (is_polynomial()) {
        Rational c = den.constant_value();
        MultiPoly n = num;
        n *= Rational(1) / c;
        return RatFunc(n);
    }
    auto q = exact_divide(num, den);
    if (q) return RatFunc(*q);
    return *this;
}

std::optional<long> RatFunc::graded_weight(const WeightTable& w) const {
    auto wn = num.graded_weight(w);
    auto wd = den.graded_weight(w);
    if (!wn || !wd) return std::nullopt;
    return *wn - *wd;
}

std::string RatFunc::str() const {
    if (is_polynomial()) {
        RatFunc r = reduced();
        return r.num.str();
    }
    return "(" + num.str() + ") / (" + den.str() + ")";
}

RatFunc substitute(const MultiPoly& p, const std::map<std::string, RatFunc>& bind) {
    // single common denominator: D = prod d_v^{deg_v p}; avoids pairwise blowup
    const auto& vs = p.vars();
    std::vector<const RatFunc*> bound(vs.size(), nullptr);
    std::vector<long> maxdeg(vs.size(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        auto it = bind.find(vs[i]);
        if (it != bind.end()) bound[i] = &it->second;
        maxdeg[i] = std::max<long>(p.degree_in(vs[i]), 0);
    }
    // power caches
    std::vector<std::vector<MultiPoly>> npow(vs.size()), dpow(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        MultiPoly nb = bound[i] ? bound[i]->num : MultiPoly::var(vs[i]);
        MultiPoly db = bound[i] ? bound[i]->den : MultiPoly(Rational(1));
        npow[i].resize(static_cast<std::size_t>(maxdeg[i]) + 1);
        dpow[i].resize(static_cast<std::size_t>(maxdeg[i]) + 1);
        npow[i][0] = MultiPoly(Rational(1));
        dpow[i][0] = MultiPoly(Rational(1));
        for (long k = 1; k <= maxdeg[i]; ++k) {
            npow[i][static_cast<std::size_t>(k)] = npow[i][static_cast<std::size_t>(k - 1)] * nb;
            dpow[i][static_cast<std::size_t>(k)] = dpow[i][static_cast<std::size_t>(k - 1)] * db;
        }
    }
    MultiPoly N;
    for (const auto& [e, c] : p.terms()) {
        MultiPoly t{c};
        for (std::size_t i = 0; i < vs.size(); ++i) {
            t *= npow[i][static_cast<std::size_t>(e[i])];
            t *= dpow[i][static_cast<std::size_t>(maxdeg[i] - e[i])];
        }
        N += t;
    }
    MultiPoly D(Rational(1));
    for (std::size_t i = 0; i < vs.size(); ++i) D *= dpow[i][static_cast<std::size_t>(maxdeg[i])];
    return RatFunc(N, D);
}

RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bind) {
    RatFunc n = substitute(f.num, bind);
    RatFunc d = substitute(f.den, bind);
    if (d.num.is_zero()) throw std::domain_error("substitute: denominator vanishes");
    return n / d;
}

}  // namespace baker
