#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/poly.hpp"
#include "crn/sign_analysis.hpp"

namespace crn {

// ---------------------------------------------------------------------------
// Two-species rank-two networks: quadratic reduction.
//
// Every zero-one reaction on two species occupies one of twelve template
// slots (0-based below, listed with their mass-action rate variable k1..k12):
//   0: 0 -> X1        3: X1 -> 0        6: X2 -> 0        9:  X1+X2 -> 0
//   1: 0 -> X2        4: X1 -> X2       7: X2 -> X1       10: X1+X2 -> X1
//   2: 0 -> X1+X2     5: X1 -> X1+X2    8: X2 -> X1+X2    11: X1+X2 -> X2
// Eliminating x1 from the steady-state system leaves a quadratic
// C1*x2^2 + C2*x2 + C3 = 0 whose coefficients are polynomials in the twelve
// template rates.
// ---------------------------------------------------------------------------

struct QuadraticReduction {
    Poly C1, C2, C3;             // full 12-rate template coefficients
    Poly C1r, C2r, C3r;          // with absent-slot rates set to zero
    std::vector<int> slot;       // template slot of each network reaction
    std::vector<bool> present;   // 12 flags
    // True when slots {X1->0, X1->X2, X1+X2->0, X1+X2->X2} are all absent, so
    // x1 cannot be eliminated; such networks have no positive steady state.
    bool denominator_degenerate = false;
};

enum class TwoSpeciesVerdict { no_positive, one_nondegenerate, degenerate_continuum };

// Requires a two-species rank-two zero-one network.
QuadraticReduction two_species_reduce(const ReactionNetwork& net);

// Exact sign analysis of the reduced quadratic at the given rates (one per
// network reaction, in network order).
TwoSpeciesVerdict two_species_verdict(const QuadraticReduction& red,
                                      const std::vector<Rational>& kappa);

// ---------------------------------------------------------------------------
// Three-species rank-two networks: conservation-pair classification.
// The single conservation law reads x_i = a x_j + b x_k + c for each species
// with a nonzero kernel coefficient; maximum networks fall into three classes
// by the normalized (a, b) pair.
// ---------------------------------------------------------------------------

enum class MaxNetClass { G1, G2, G3, not_maximum };

struct MaximumClass {
    Rational a, b;               // reported pair (after any relabeling applied)
    std::vector<int> labels;     // species order used: x_{labels[0]} = a x_{labels[1]} + ...
    MaxNetClass cls = MaxNetClass::G3;
    std::optional<std::string> catalog_id;  // matching shipped fixture, if any
};

// Requires s = 3 and rank 2.  Classifies by the conservation pair only; the
// caller decides maximality via maximal_closure.
MaximumClass classify_conservation_pair(const StoichiometricData& sd);

// Adds every zero-one reaction on the same species whose stoichiometric
// column lies in the column span; the unique maximum network containing net
// at the same rank.  Requires s <= 3.
ReactionNetwork maximal_closure(const ReactionNetwork& net);

// True when maximal_closure(net) == net as a reaction set.
bool is_maximum_network(const ReactionNetwork& net);

// Canonical-form match against the shipped catalog fixtures; nullopt if none.
std::optional<std::string> catalog_match(const ReactionNetwork& net);

enum class DegeneracyVerdict { only_degenerate, nondegenerate_possible, no_positive_flux };

struct DegeneracyResult {
    DegeneracyVerdict verdict;
    std::optional<SignReport> sign;  // present for nondegenerate_possible
};

// Requires s = 3 and rank 2.
DegeneracyResult degeneracy_verdict(const ReactionNetwork& net);

}  // namespace crn
