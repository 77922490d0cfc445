#pragma once

#include <optional>
#include <vector>

#include "crn/interval.hpp"
#include "crn/network.hpp"

namespace crn {

enum class Stability { stable, unstable, undetermined };

struct SteadyStateSolution {
    std::vector<Interval> x;  // strictly positive certified enclosure
    bool nondegenerate = false;
    Stability stability = Stability::undetermined;
    int det_jac_h_sign = 0;  // -1 / 0 (undecided) / +1
    int det_jac_f_sign = 0;
    bool certified = true;  // false if the enclosure resisted certification
};

enum class SolveStatus { ok, degenerate_continuum, elimination_failed };

struct SolveResult {
    SolveStatus status = SolveStatus::ok;
    std::vector<SteadyStateSolution> solutions;
};

// All positive solutions of the conservation-augmented steady-state system at
// fixed rates kappa and total constants c (length = number of conservation
// laws).  Method: substitute the conservation laws, eliminate down to one
// univariate "shadow" polynomial per remaining variable via successive
// resultants, isolate positive roots by Sturm bisection, filter candidate
// boxes by interval evaluation, and certify each survivor with a Krawczyk
// step.  A continuum of solutions (identically vanishing eliminant in every
// variable order) is reported via status.
SolveResult solve_positive_steady_states(const ReactionNetwork& net,
                                         const std::vector<Rational>& kappa,
                                         const std::vector<Rational>& c,
                                         const Rational& max_width = rat(1, 1000000000000LL));

struct HurwitzData {
    // coefficient of lambda^k of det(lambda I - Jac_f) at k = 0..s; the
    // leading coefficient is 1 and the lowest s - r coefficients vanish.
    std::vector<Interval> char_poly;
    // determinants H_1..H_r for the degree-r cofactor with the zero
    // eigenvalues of the conserved directions factored out.
    std::vector<Interval> hurwitz_determinants;
};

// Principal-minor-sum characteristic polynomial and its Hurwitz determinants
// at the enclosure x.
HurwitzData hurwitz_data(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                         const std::vector<Interval>& x);

// Hurwitz determinants H_1..H_n for b = (b_0, ..., b_n) with b_n the leading
// coefficient: H_i is the i-th leading principal minor of the matrix with
// entries b_{n - 2i + j} (zero outside 0..n).
std::vector<Interval> hurwitz_determinants(const std::vector<Interval>& b);

// Stability on the stoichiometric class: negative augmented-Jacobian
// determinant at rank 1, trace/determinant conditions at rank 2, Hurwitz
// determinants of the nonzero spectrum otherwise.
Stability classify_stability(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                             const std::vector<Interval>& x);

struct NondegeneracyReport {
    bool nondegenerate = false;
    int det_jac_h_sign = 0;
    int det_jac_f_sign = 0;
};

NondegeneracyReport nondegeneracy(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                                  const std::vector<Interval>& x);

}  // namespace crn
