#pragma once

#include <map>
#include <string>
#include <vector>

#include "crn/interval.hpp"
#include "crn/rational.hpp"

namespace crn {

// Dense exponent vector over a fixed variable universe.  Networks are tiny,
// so a plain vector<int> per term is cheaper than any hashing scheme.
using Exponents = std::vector<int>;

// Graded lexicographic, leading term first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int index);
    static Poly monomial(int nvars, Exponents e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& other) const;

    Poly derivative(int var) const;
    Poly substitute_zero(int var) const;
    Poly substitute(int var, const Rational& value) const;
    Poly substitute(int var, const Poly& replacement) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    Interval evaluate_interval(const IntervalVector& box) const;

    int degree_in(int var) const;
    int total_degree() const;

    // Coefficient polynomials of var^0..var^deg, each with the variable's
    // exponent cleared (same universe).
    std::vector<Poly> coefficients_in(int var) const;

    bool has_term_divisible_by(const Exponents& e) const;

    // Quotient when the division is exact; throws std::logic_error otherwise.
    Poly exact_div(const Poly& divisor) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_;
    TermMap terms_;
};

enum class SignProfile { zero, all_positive, all_negative, mixed };

SignProfile term_sign_profile(const Poly& p);

using PolyMatrix = std::vector<std::vector<Poly>>;

// Cofactor expansion for n <= 4, fraction-free Bareiss elimination above.
Poly det(const PolyMatrix& m);

// Sylvester resultant eliminating the given variable.
Poly resultant(const Poly& a, const Poly& b, int var);

}  // namespace crn
