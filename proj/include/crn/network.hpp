#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/matrix.hpp"

namespace crn {

struct Complex {
    // One coefficient per species; zero-one unless the network is explicitly
    // flagged as general.
    std::vector<int> coefficients;

    bool operator==(const Complex&) const = default;
};

struct Reaction {
    Complex reactant;
    Complex product;

    bool operator==(const Reaction&) const = default;
};

struct ReactionNetwork {
    std::vector<std::string> species_names;
    std::vector<Reaction> reactions;
    bool zero_one = true;

    int species_count() const { return static_cast<int>(species_names.size()); }
    int reaction_count() const { return static_cast<int>(reactions.size()); }
};

struct StoichiometricData {
    IMatrix N;                         // s x m, product minus reactant
    IMatrix Y;                         // s x m, reactant coefficients
    int rank_N = 0;                    // r
    QMatrix W;                         // d x s RREF basis of the left kernel
    std::vector<int> leading_indices;  // pivot columns of W, ascending

    int species_count() const { return static_cast<int>(N.size()); }
    int reaction_count() const { return N.empty() ? 0 : static_cast<int>(N[0].size()); }
    int deficiency_dim() const { return static_cast<int>(W.size()); }  // d = s - r
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

ReactionNetwork parse_network(const std::string& text, bool allow_general = false);

std::string format_network(const ReactionNetwork& net);

StoichiometricData stoichiometric_data(const ReactionNetwork& net);

// Lexicographically minimal relabeling over all species permutations, with
// reactions sorted; equal outputs iff networks are permutation-isomorphic.
ReactionNetwork canonical_form(const ReactionNetwork& net);

bool is_canonical(const ReactionNetwork& net);

// The full zero-one reaction universe on s species (reactant != product),
// in the deterministic enumeration order.
std::vector<Reaction> reaction_universe(int s);

struct EnumerationOptions {
    std::optional<int> rank_filter;
    bool canonical_only = false;
    // Extra predicate (e.g. flux-cone or B-polynomial filters supplied by
    // higher layers); applied last.
    std::function<bool(const ReactionNetwork&)> predicate;
};

// Yields every m-subset of the reaction universe passing the filters.
void enumerate_networks(int s, int m, const EnumerationOptions& opts,
                        const std::function<void(const ReactionNetwork&)>& yield);

std::uint64_t count_networks(int s, int m, const EnumerationOptions& opts);

}  // namespace crn
