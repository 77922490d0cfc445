#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace crn {

// Exact rational arithmetic everywhere; doubles appear only in reports and
// cross-checks.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "3", "-3/4" and plain decimals like "0.25" or "-1.5e2".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// Decimal rendering with the given number of significant digits (round to
// nearest), for report output.
std::string to_decimal_string(const Rational& q, int digits = 12);

inline int sign(const Rational& q) { return sgn(q); }

std::vector<Rational> parse_rational_list(const std::string& csv);

}  // namespace crn
