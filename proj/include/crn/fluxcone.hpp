#pragma once

#include <optional>

#include "crn/network.hpp"

namespace crn {

struct ExtremeRaySet {
    // Each ray is a coprime nonnegative integer vector in Q^m with N ray = 0,
    // in a deterministic order (support pattern, then lexicographic).
    std::vector<std::vector<Rational>> rays;

    int count() const { return static_cast<int>(rays.size()); }
};

ExtremeRaySet extreme_rays(const StoichiometricData& sd);

// True iff the flux cone meets the open positive orthant, i.e. the sum of
// all extreme rays is strictly positive in every coordinate.
bool strictly_positive_flux_exists(const ExtremeRaySet& rays, int m);

// One nonnegative lambda with sum lambda_k R^(k) = gamma, or nullopt if gamma
// is outside the cone (only possible when the precondition N gamma = 0 fails).
std::optional<std::vector<Rational>> decompose_flux(const std::vector<Rational>& gamma,
                                                    const ExtremeRaySet& rays);

}  // namespace crn
