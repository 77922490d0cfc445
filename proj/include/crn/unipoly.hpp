#pragma once

#include <vector>

#include "crn/interval.hpp"
#include "crn/poly.hpp"
#include "crn/rational.hpp"

namespace crn {

// Dense univariate polynomial over the rationals, ascending coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    // Requires every term of p to involve only `var`.
    static UniPoly from_poly(const Poly& p, int var);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational evaluate(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly squarefree_part() const;

    // Quotient by (x - root); root must be an exact root.
    UniPoly deflate(const Rational& root) const;

    // Strictly positive real roots, each as a point interval (exact rational
    // root) or an open isolating interval with non-root endpoints, refined to
    // width <= max_width.  Requires a squarefree input for interval roots;
    // call squarefree_part() first.
    std::vector<Interval> isolate_positive_roots(const Rational& max_width) const;

    // Halve the enclosure until width <= target (point intervals returned
    // unchanged).  The interval must bracket a sign change.
    Interval refine_root(Interval iv, const Rational& target) const;

    // All real roots are below this integer bound in absolute value.
    Rational root_bound() const;

private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);

}  // namespace crn
