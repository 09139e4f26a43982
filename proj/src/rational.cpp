#include "baker/rational.hpp"

#include <cctype>

namespace baker {

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // plain integer or p/q
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos) {
        Rational q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        q.canonicalize();
        return q;
    }
    // decimal / scientific: sign, digits, optional fraction, optional exponent
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    std::string digits;
    long frac_len = 0, expo = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac_len;
        }
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = (s[i] == '-');
            ++i;
        }
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
        if (ed.empty()) throw std::invalid_argument("bad exponent in: " + s);
        expo = std::stol(ed);
        if (eneg) expo = -expo;
    }
    if (i != s.size() || digits.empty())
        throw std::invalid_argument("bad rational literal: " + s);
    mpz_class mant(digits, 10);
    if (neg) mant = -mant;
    long net = expo - frac_len;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    Rational q;
    if (net >= 0)
        q = Rational(mant * p10);
    else
        q = Rational(mant, p10);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long k = static_cast<unsigned long>(inv ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), k);
    if (inv) {
        if (n == 0) throw std::domain_error("rat_pow: zero to negative power");
        std::swap(n, d);
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational factorial_q(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace baker
