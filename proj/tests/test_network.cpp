#include "doctest.h"

#include <random>
#include <set>

#include "crn/network.hpp"
#include "fixtures.hpp"

using namespace crn;

TEST_CASE("parsing basics") {
    ReactionNetwork net = parse_network("X1 -> X2");
    CHECK(net.species_count() == 2);
    CHECK(net.reaction_count() == 1);
    StoichiometricData sd = stoichiometric_data(net);
    CHECK(sd.N == IMatrix{{-1}, {1}});

    ReactionNetwork two = parse_network("X1 + X2 + X3 -> 0 ; 0 -> X3");
    CHECK(two.reaction_count() == 2);
    StoichiometricData sd2 = stoichiometric_data(two);
    CHECK(sd2.N == IMatrix{{-1, 0}, {-1, 0}, {-1, 1}});

    CHECK_THROWS_AS(parse_network("X1 -> X1"), ParseError);
    CHECK_THROWS_AS(parse_network("X1 -> X2\nX1 -> X2"), ParseError);
    CHECK_THROWS_AS(parse_network("X1 + X1 -> X2"), ParseError);
    CHECK_THROWS_AS(parse_network("X1 X2"), ParseError);
}

TEST_CASE("reversible arrows expand forward then backward") {
    ReactionNetwork net = parse_network("X1 <-> X2");
    REQUIRE(net.reaction_count() == 2);
    CHECK(net.reactions[0].reactant.coefficients == std::vector<int>{1, 0});
    CHECK(net.reactions[1].reactant.coefficients == std::vector<int>{0, 1});
}

TEST_CASE("stoichiometric data for the rank-one fixture") {
    ReactionNetwork net = load_network("example2.crn");
    StoichiometricData sd = stoichiometric_data(net);
    CHECK(sd.N == IMatrix{{-1, 1}, {1, -1}, {1, -1}});
    CHECK(sd.rank_N == 1);
    REQUIRE(sd.W.size() == 2);
    // Conservation laws x1 + x3 = c1 and x2 - x3 = c2.
    CHECK(sd.W[0] == std::vector<Rational>{rat(1), rat(0), rat(1)});
    CHECK(sd.W[1] == std::vector<Rational>{rat(0), rat(1), rat(-1)});
    CHECK(sd.leading_indices == std::vector<int>{0, 1});
}

TEST_CASE("full-rank network has empty W") {
    ReactionNetwork net = load_network("example5.crn");
    StoichiometricData sd = stoichiometric_data(net);
    CHECK(sd.rank_N == 3);
    CHECK(sd.W.empty());
}

TEST_CASE("W annihilates N for every fixture") {
    for (const char* name : {"example2.crn", "example3.crn", "example5.crn", "example6.crn",
                             "g1max.crn", "g21.crn", "g23.crn", "g35.crn"}) {
        StoichiometricData sd = stoichiometric_data(load_network(name));
        for (const auto& row : sd.W)
            for (int j = 0; j < sd.reaction_count(); ++j) {
                Rational dot = 0;
                for (int i = 0; i < sd.species_count(); ++i)
                    dot += row[static_cast<size_t>(i)] * sd.N[static_cast<size_t>(i)][static_cast<size_t>(j)];
                CHECK(dot == 0);
            }
        CHECK(sd.rank_N + sd.deficiency_dim() == sd.species_count());
    }
}

TEST_CASE("enumeration counts") {
    EnumerationOptions none;
    CHECK(count_networks(3, 1, none) == 56);
    CHECK(count_networks(2, 1, none) == 12);
}

TEST_CASE("canonical form identifies relabeled networks") {
    ReactionNetwork a = parse_network("X1 -> X2");
    ReactionNetwork b = parse_network("X2 -> X1");
    CHECK(format_network(canonical_form(a)) == format_network(canonical_form(b)));

    ReactionNetwork e5 = load_network("example5.crn");
    ReactionNetwork c1 = canonical_form(e5);
    CHECK(format_network(canonical_form(c1)) == format_network(c1));

    // Cyclic relabeling (1 2 3) -> (2 3 1).
    ReactionNetwork rotated = parse_network(
        "X2 + X3 -> X1\n"
        "X1 -> 0\n"
        "0 -> X1\n"
        "X2 + X1 -> X2 + X3 + X1\n"
        "X3 + X1 -> X2 + X3 + X1\n");
    CHECK(format_network(canonical_form(rotated)) == format_network(c1));
}

TEST_CASE("canonical enumeration yields non-isomorphic representatives") {
    std::vector<ReactionNetwork> reps;
    EnumerationOptions opts;
    opts.canonical_only = true;
    enumerate_networks(2, 2, opts, [&](const ReactionNetwork& n) { reps.push_back(n); });
    std::set<std::string> canon;
    for (const auto& n : reps) CHECK(canon.insert(format_network(canonical_form(n))).second);

    // Every network's orbit has exactly one representative in the list.
    EnumerationOptions none;
    size_t all = 0;
    enumerate_networks(2, 2, none, [&](const ReactionNetwork& n) {
        ++all;
        CHECK(canon.count(format_network(canonical_form(n))) == 1);
    });
    CHECK(all == 66);  // C(12, 2)
}
