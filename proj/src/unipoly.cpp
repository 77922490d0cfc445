#include "crn/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace crn {

namespace {

// Remainder of a / b over Q.
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

Rational eval_coeffs(const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

int sign_changes(const std::vector<std::vector<Rational>>& seq, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& p : seq) {
        int s = sgn(eval_coeffs(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::vector<std::vector<Rational>> sturm_sequence(const std::vector<Rational>& c) {
    std::vector<std::vector<Rational>> seq;
    seq.push_back(c);
    std::vector<Rational> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
    while (!d.empty()) {
        seq.push_back(d);
        std::vector<Rational> r = poly_rem(seq[seq.size() - 2], d);
        for (auto& v : r) v = -v;
        d = std::move(r);
    }
    return seq;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_poly(const Poly& p, int var) {
    std::vector<Rational> c;
    for (const auto& [e, coeff] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] != 0)
                throw std::invalid_argument("from_poly: polynomial is not univariate");
        size_t deg = static_cast<size_t>(e[static_cast<size_t>(var)]);
        if (c.size() <= deg) c.resize(deg + 1, Rational(0));
        c[deg] = coeff;
    }
    return UniPoly(std::move(c));
}

Rational UniPoly::evaluate(const Rational& x) const { return eval_coeffs(c_, x); }

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly gcd(UniPoly a, UniPoly b) {
    std::vector<Rational> x = a.coefficients(), y = b.coefficients();
    while (!y.empty()) {
        std::vector<Rational> r = poly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty()) {
        Rational lead = x.back();
        for (auto& v : x) v /= lead;
    }
    return UniPoly(std::move(x));
}

UniPoly UniPoly::squarefree_part() const {
    if (degree() <= 1) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    std::vector<Rational> q(c_.size() - g.c_.size() + 1, Rational(0));
    std::vector<Rational> rem = c_;
    while (rem.size() >= g.c_.size() && !rem.empty()) {
        Rational factor = rem.back() / g.c_.back();
        size_t shift = rem.size() - g.c_.size();
        q[shift] = factor;
        for (size_t i = 0; i < g.c_.size(); ++i) rem[shift + i] -= factor * g.c_[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return UniPoly(std::move(q));
}

UniPoly UniPoly::deflate(const Rational& root) const {
    // Synthetic division by (x - root).
    std::vector<Rational> q(c_.size() > 0 ? c_.size() - 1 : 0, Rational(0));
    Rational carry = 0;
    for (size_t i = c_.size(); i-- > 1;) {
        carry = c_[i] + carry * root;
        q[i - 1] = carry;
    }
    return UniPoly(std::move(q));
}

Rational UniPoly::root_bound() const {
    if (c_.size() <= 1) return Rational(1);
    Rational maxratio = 0;
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        Rational r = abs(c_[i] / c_.back());
        if (r > maxratio) maxratio = r;
    }
    Rational bound = 1 + maxratio;
    // Round up to an integer so endpoint evaluations stay cheap.
    mpz_class num = bound.get_num(), den = bound.get_den(), q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Rational(q);
}

std::vector<Interval> UniPoly::isolate_positive_roots(const Rational& max_width) const {
    std::vector<Rational> exact_roots;
    UniPoly p = *this;
    if (p.is_zero()) throw std::invalid_argument("isolate_positive_roots: zero polynomial");

restart:
    // Remove roots at the origin; they are not positive.
    while (!p.c_.empty() && p.c_[0] == 0) p.c_.erase(p.c_.begin());
    if (p.degree() >= 1) {
        auto seq = sturm_sequence(p.c_);
        Rational b = p.root_bound();
        struct Span {
            Rational lo, hi;
            int count;
        };
        std::vector<Span> stack;
        std::vector<Interval> isolated;
        int total = sign_changes(seq, Rational(0)) - sign_changes(seq, b);
        if (total > 0) stack.push_back({Rational(0), b, total});
        while (!stack.empty()) {
            Span s = stack.back();
            stack.pop_back();
            if (s.count == 1 && s.hi - s.lo <= max_width) {
                isolated.push_back(Interval(s.lo, s.hi));
                continue;
            }
            Rational mid = (s.lo + s.hi) / 2;
            if (p.evaluate(mid) == 0) {
                exact_roots.push_back(mid);
                p = p.deflate(mid);
                goto restart;
            }
            int left = sign_changes(seq, s.lo) - sign_changes(seq, mid);
            if (left > 0) stack.push_back({s.lo, mid, left});
            if (s.count - left > 0) stack.push_back({mid, s.hi, s.count - left});
        }
        std::vector<Interval> out;
        for (const Rational& r : exact_roots)
            if (r > 0) out.push_back(Interval(r));
        out.insert(out.end(), isolated.begin(), isolated.end());
        std::sort(out.begin(), out.end(),
                  [](const Interval& a, const Interval& b2) { return a.lo < b2.lo; });
        return out;
    }
    {
        std::vector<Interval> out;
        for (const Rational& r : exact_roots)
            if (r > 0) out.push_back(Interval(r));
        std::sort(out.begin(), out.end(),
                  [](const Interval& a, const Interval& b2) { return a.lo < b2.lo; });
        return out;
    }
}

Interval UniPoly::refine_root(Interval iv, const Rational& target) const {
    if (iv.is_point()) return iv;
    int slo = sgn(evaluate(iv.lo));
    int shi = sgn(evaluate(iv.hi));
    if (slo == 0) return Interval(iv.lo);
    if (shi == 0) return Interval(iv.hi);
    if (slo == shi) throw std::logic_error("refine_root: no sign change over the interval");
    while (iv.width() > target) {
        Rational mid = iv.mid();
        int sm = sgn(evaluate(mid));
        if (sm == 0) return Interval(mid);
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

}  // namespace crn
