#include "crn/interval.hpp"

namespace crn {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
}

Interval operator*(const Rational& c, const Interval& a) {
    if (c >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

Interval operator+(const Interval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }

bool intersect(const Interval& a, const Interval& b, Interval& out) {
    Rational lo = std::max(a.lo, b.lo);
    Rational hi = std::min(a.hi, b.hi);
    if (lo > hi) return false;
    out = {lo, hi};
    return true;
}

Interval pow(const Interval& base, int e) {
    if (e == 0) return Interval(Rational(1));
    if (e == 1) return base;
    if (e % 2 == 0 && base.contains_zero()) {
        // Even power of a zero-straddling interval: [0, max^e].
        Rational m = std::max(Rational(-base.lo), base.hi);
        Rational hi = 1;
        for (int i = 0; i < e; ++i) hi *= m;
        return {Rational(0), hi};
    }
    Interval acc = base;
    for (int i = 1; i < e; ++i) acc = acc * base;
    return acc;
}

Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

}  // namespace crn
