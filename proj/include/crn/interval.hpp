#pragma once

#include <algorithm>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

// Closed interval with exact rational endpoints.  All operations return
// enclosures (outward-exact, since rational arithmetic never rounds).
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    explicit Interval(const Rational& v) : lo(v), hi(v) {}
    Interval(const Rational& a, const Rational& b) : lo(a), hi(b) {}

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const Rational& v) const { return lo <= v && hi >= v; }
    bool strictly_positive() const { return lo > 0; }
    bool strictly_negative() const { return hi < 0; }

    // -1, 0 (straddles), +1; 0 also for the exact point interval [0,0].
    int sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& c, const Interval& a);
Interval operator+(const Interval& a, const Rational& c);

bool intersect(const Interval& a, const Interval& b, Interval& out);

Interval pow(const Interval& base, int e);

Interval hull(const Interval& a, const Interval& b);

using IntervalVector = std::vector<Interval>;

}  // namespace crn
