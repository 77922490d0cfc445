#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/interval.hpp"
#include "crn/network.hpp"

namespace crn {

// Structure of a rank-one network: every species satisfies x_i = a_i * x_p + c_k
// along a stoichiometric class, where x_p is the species left free by the
// conservation laws. The index sets partition the conservation rows by the
// sign of a_i.
struct OneDimStructure {
    int pivot;                      // species index left free by W
    std::vector<int> a;             // per conservation row: -W[k][pivot] in {-1,0,1}
    std::vector<int> leading;       // species index of each conservation row
    std::vector<int> J1, J2, J3;    // conservation-row indices with a = 1 / -1 / 0
    bool all_rows_change_sign = false;
};

enum class OneDimVerdict {
    no_steady_states,        // some nonzero stoichiometric row has constant sign
    no_positive_class,       // the class P_c has no positive points
    one_stable_steady_state  // exactly one positive steady state; it is stable
};

struct OneDimFullResult {
    OneDimVerdict verdict;
    std::optional<std::vector<Interval>> steady_state;  // present iff one state exists
    std::optional<bool> stable;
};

// Requires rank(N) == 1; throws std::invalid_argument otherwise.
OneDimStructure analyze_one_dim(const StoichiometricData& sd);

// Classification of the stoichiometric class with total constants c (one per
// conservation row, in row order). Independent of kappa.
OneDimVerdict classify_total_constant(const OneDimStructure& st, const std::vector<Rational>& c);

// Human-readable open conditions on c describing the nonempty-class region.
std::vector<std::string> region_inequalities(const OneDimStructure& st);

// Explicit point in the open stoichiometric class; nullopt if the region
// condition fails.
std::optional<std::vector<Rational>> witness_point(const OneDimStructure& st,
                                                   const std::vector<Rational>& c);

// Classification plus, when a state exists, a certified enclosure of it and a
// stability check (negative determinant of the augmented Jacobian).
OneDimFullResult one_dim_full_verdict(const StoichiometricData& sd,
                                      const std::vector<Rational>& kappa,
                                      const std::vector<Rational>& c,
                                      const Rational& max_width = rat(1, 1000000000000LL));

}  // namespace crn
