#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn {

inline constexpr const char* kReportSchemaVersion = "1";

// Exact endpoints as rational strings plus a 12-digit decimal midpoint.
std::string rational_string(const Rational& r);
std::string decimal_string(const Rational& r);

// Full single-network analysis: structural data, injectivity screen, and a
// rank-dispatched deep dive (one-dimensional classifier at rank 1, quadratic
// reduction / conservation-pair / sign machinery at rank 2, solver plus
// Hurwitz data whenever rates are supplied).  Throws std::invalid_argument
// for unsupported shapes (more than four species) or mismatched parameter
// lengths.
nlohmann::json analyze_report(const ReactionNetwork& net,
                              const std::optional<std::vector<Rational>>& kappa,
                              const std::optional<std::vector<Rational>>& c);

}  // namespace crn
