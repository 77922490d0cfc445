#include "crn/rational.hpp"

#include <cctype>
#include <sstream>

namespace crn {

namespace {

Rational pow10(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(1, p);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        Rational q = num / den;
        q.canonicalize();
        return q;
    }

    // Split off an exponent part if present.
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(s.substr(epos + 1));
        s = s.substr(0, epos);
    }

    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    auto dot = s.find('.');
    std::string digits = s;
    long frac_len = 0;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        frac_len = static_cast<long>(s.size() - dot - 1);
    }
    if (digits.empty()) throw std::invalid_argument("bad rational literal '" + text + "'");
    for (char ch : digits)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad rational literal '" + text + "'");

    Rational q(mpz_class(digits, 10));
    q *= pow10(exp10 - frac_len);
    if (neg) q = -q;
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal_string(const Rational& q, int digits) {
    if (q == 0) return "0";
    mpf_class f(q, 64 + static_cast<unsigned>(digits) * 4);
    mp_exp_t exp;
    std::string mant = f.get_str(exp, 10, static_cast<size_t>(digits));
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant = mant.substr(1);
    }
    std::ostringstream out;
    out << sign;
    if (exp <= 0) {
        out << "0." << std::string(static_cast<size_t>(-exp), '0') << mant;
    } else if (static_cast<size_t>(exp) >= mant.size()) {
        out << mant << std::string(static_cast<size_t>(exp) - mant.size(), '0');
    } else {
        out << mant.substr(0, static_cast<size_t>(exp)) << "." << mant.substr(static_cast<size_t>(exp));
    }
    return out.str();
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(parse_rational(item));
    return out;
}

}  // namespace crn
