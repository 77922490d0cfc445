#include "crn/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crn {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    // Same total degree: later variables rank higher.
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = 1;
    return monomial(nvars, std::move(e), Rational(1));
}

Poly Poly::monomial(int nvars, Exponents e, const Rational& c) {
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.nvars_);
    Exponents e(static_cast<size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const Rational& c) const {
    Poly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

bool Poly::operator==(const Poly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Poly Poly::derivative(int var) const {
    Poly out(nvars_);
    size_t v = static_cast<size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents d = e;
        --d[v];
        out.add_term(d, c * e[v]);
    }
    return out;
}

Poly Poly::substitute_zero(int var) const {
    Poly out(nvars_);
    size_t v = static_cast<size_t>(var);
    for (const auto& [e, c] : terms_)
        if (e[v] == 0) out.terms_.emplace(e, c);
    return out;
}

Poly Poly::substitute(int var, const Rational& value) const {
    Poly out(nvars_);
    size_t v = static_cast<size_t>(var);
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        for (int i = 0; i < e[v]; ++i) coeff *= value;
        Exponents d = e;
        d[v] = 0;
        out.add_term(d, coeff);
    }
    return out;
}

Poly Poly::substitute(int var, const Poly& replacement) const {
    size_t v = static_cast<size_t>(var);
    int maxdeg = degree_in(var);
    std::vector<Poly> powers;
    powers.push_back(Poly::constant(nvars_, Rational(1)));
    for (int i = 1; i <= maxdeg; ++i) powers.push_back(powers.back() * replacement);

    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[v] = 0;
        out += powers[static_cast<size_t>(e[v])] * Poly::monomial(nvars_, d, c);
    }
    return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != static_cast<size_t>(nvars_))
        throw std::invalid_argument("evaluate: wrong point dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        sum += term;
    }
    return sum;
}

Interval Poly::evaluate_interval(const IntervalVector& box) const {
    if (box.size() != static_cast<size_t>(nvars_))
        throw std::invalid_argument("evaluate_interval: wrong box dimension");
    Interval sum(Rational(0));
    for (const auto& [e, c] : terms_) {
        Interval term(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * pow(box[i], e[i]);
        sum = sum + term;
    }
    return sum;
}

int Poly::degree_in(int var) const {
    int deg = 0;
    size_t v = static_cast<size_t>(var);
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[v]);
    return deg;
}

int Poly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

std::vector<Poly> Poly::coefficients_in(int var) const {
    size_t v = static_cast<size_t>(var);
    std::vector<Poly> coeffs(static_cast<size_t>(degree_in(var)) + 1, Poly(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        int k = d[v];
        d[v] = 0;
        coeffs[static_cast<size_t>(k)].add_term(d, c);
    }
    return coeffs;
}

bool Poly::has_term_divisible_by(const Exponents& e) const {
    for (const auto& [t, c] : terms_) {
        bool ok = true;
        for (size_t i = 0; i < e.size() && ok; ++i) ok = t[i] >= e[i];
        if (ok) return true;
    }
    return false;
}

Poly Poly::exact_div(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("exact_div: division by zero polynomial");
    Poly remainder = *this;
    Poly quotient(nvars_);
    const auto& lead = *divisor.terms_.begin();
    while (!remainder.is_zero()) {
        const auto& rlead = *remainder.terms_.begin();
        Exponents q(static_cast<size_t>(nvars_));
        for (size_t i = 0; i < q.size(); ++i) {
            q[i] = rlead.first[i] - lead.first[i];
            if (q[i] < 0) throw std::logic_error("exact_div: not divisible");
        }
        Poly qterm = Poly::monomial(nvars_, q, rlead.second / lead.second);
        quotient += qterm;
        remainder -= qterm * divisor;
    }
    return quotient;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;

        std::string vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out << crn::to_string(a);
        } else {
            if (a != 1) out << crn::to_string(a) << "*";
            out << vars;
        }
    }
    return out.str();
}

SignProfile term_sign_profile(const Poly& p) {
    if (p.is_zero()) return SignProfile::zero;
    bool pos = false, neg = false;
    for (const auto& [e, c] : p.terms()) (c > 0 ? pos : neg) = true;
    if (pos && neg) return SignProfile::mixed;
    return pos ? SignProfile::all_positive : SignProfile::all_negative;
}

namespace {

Poly det_cofactor(const PolyMatrix& m) {
    size_t n = m.size();
    if (n == 0) return Poly(0);
    if (n == 1) return m[0][0];
    int nvars = m[0][0].nvars();
    Poly acc(nvars);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor(n - 1, std::vector<Poly>(n - 1, Poly(nvars)));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        Poly term = m[0][j] * det_cofactor(minor);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

Poly det_bareiss(PolyMatrix m) {
    size_t n = m.size();
    int nvars = m[0][0].nvars();
    Poly prev = Poly::constant(nvars, Rational(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t sel = k + 1;
            while (sel < n && m[sel][k].is_zero()) ++sel;
            if (sel == n) return Poly(nvars);
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    Poly result = m[n - 1][n - 1];
    return sign < 0 ? -result : result;
}

}  // namespace

Poly det(const PolyMatrix& m) {
    if (m.size() <= 4) return det_cofactor(m);
    return det_bareiss(m);
}

Poly resultant(const Poly& a, const Poly& b, int var) {
    int nvars = a.nvars();
    if (a.is_zero() || b.is_zero()) return Poly(nvars);
    std::vector<Poly> ca = a.coefficients_in(var);
    std::vector<Poly> cb = b.coefficients_in(var);
    size_t da = ca.size() - 1, db = cb.size() - 1;
    if (da == 0 && db == 0) return Poly::constant(nvars, Rational(1));
    if (da == 0) {
        Poly out = Poly::constant(nvars, Rational(1));
        for (size_t i = 0; i < db; ++i) out = out * ca[0];
        return out;
    }
    if (db == 0) {
        Poly out = Poly::constant(nvars, Rational(1));
        for (size_t i = 0; i < da; ++i) out = out * cb[0];
        return out;
    }
    size_t n = da + db;
    PolyMatrix syl(n, std::vector<Poly>(n, Poly(nvars)));
    for (size_t row = 0; row < db; ++row)
        for (size_t i = 0; i <= da; ++i) syl[row][row + i] = ca[da - i];
    for (size_t row = 0; row < da; ++row)
        for (size_t i = 0; i <= db; ++i) syl[db + row][row + i] = cb[db - i];
    return det(syl);
}

}  // namespace crn
