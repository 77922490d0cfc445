#include "doctest.h"

#include <random>
#include <set>

#include "crn/lowdim.hpp"
#include "crn/symbolics.hpp"
#include "crn/unipoly.hpp"
#include "fixtures.hpp"

using namespace crn;

namespace {

// Lift a 12-variable template polynomial into the session universe of a
// 12-reaction two-species network (rate variables come first in both).
Poly lift(const Poly& p, int nvars) {
    Poly out(nvars);
    for (const auto& [e, c] : p.terms()) {
        Exponents ext(static_cast<size_t>(nvars), 0);
        std::copy(e.begin(), e.end(), ext.begin());
        out.add_term(ext, c);
    }
    return out;
}

ReactionNetwork full_two_species_template() {
    return parse_network(
        "0 -> X1\n0 -> X2\n0 -> X1 + X2\n"
        "X1 -> 0\nX1 -> X2\nX1 -> X1 + X2\n"
        "X2 -> 0\nX2 -> X1\nX2 -> X1 + X2\n"
        "X1 + X2 -> 0\nX1 + X2 -> X1\nX1 + X2 -> X2\n");
}

}  // namespace

TEST_CASE("quadratic reduction matches symbolic elimination of x1") {
    ReactionNetwork net = full_two_species_template();
    QuadraticReduction red = two_species_reduce(net);
    for (size_t j = 0; j < 12; ++j) CHECK(red.slot[j] == static_cast<int>(j));
    CHECK(!red.denominator_degenerate);

    StoichiometricData sd = stoichiometric_data(net);
    VarUniverse u{12, 2, 0, 0};
    SteadyStateSystem ss = build_f(sd, u);

    // Both steady-state components are linear in x1; the determinant of their
    // coefficient pair is exactly the eliminant.
    auto f1 = ss.f[0].coefficients_in(u.x(0));
    auto f2 = ss.f[1].coefficients_in(u.x(0));
    REQUIRE(f1.size() == 2);
    REQUIRE(f2.size() == 2);
    Poly eliminant = f1[1] * f2[0] - f1[0] * f2[1];

    Poly x2 = Poly::variable(u.nvars(), u.x(1));
    Poly quadratic = lift(red.C1, u.nvars()) * x2 * x2 + lift(red.C2, u.nvars()) * x2 +
                     lift(red.C3, u.nvars());
    CHECK((quadratic == eliminant || quadratic == -eliminant));
}

TEST_CASE("reduced coefficients at unit rates") {
    ReactionNetwork net = full_two_species_template();
    QuadraticReduction red = two_species_reduce(net);
    std::vector<Rational> ones(12, rat(1));
    std::vector<Rational> full(12, rat(1));
    CHECK(red.C1r.evaluate(full) == rat(8));  // (1+1)(1+1) + (1+1)(1+1)
    CHECK(two_species_verdict(red, ones) == TwoSpeciesVerdict::one_nondegenerate);
}

TEST_CASE("degenerate two-species class") {
    // Template slots 1,2,3,10,11,12: both the quadratic and constant
    // coefficients vanish identically.
    ReactionNetwork net = load_network("example3.crn");
    QuadraticReduction red = two_species_reduce(net);
    CHECK(red.C1r.is_zero());
    CHECK(red.C3r.is_zero());
    CHECK(!red.C2r.is_zero());

    // kappa order in the fixture: 0->X1, 0->X2, 0->X1+X2, X1+X2->0,
    // X1+X2->X1, X1+X2->X2.  The continuum appears when the linear
    // coefficient vanishes.
    CHECK(two_species_verdict(red, {rat(1), rat(1), rat(2), rat(3), rat(5), rat(5)}) ==
          TwoSpeciesVerdict::degenerate_continuum);
    CHECK(two_species_verdict(red, {rat(1), rat(2), rat(2), rat(3), rat(5), rat(5)}) ==
          TwoSpeciesVerdict::no_positive);
}

TEST_CASE("two-species verdict agrees with exact root counting") {
    std::mt19937_64 rng(424242);
    auto universe = reaction_universe(2);
    REQUIRE(universe.size() == 12);
    int tested = 0;
    while (tested < 500) {
        std::uniform_int_distribution<int> mdist(2, 6);
        int m = mdist(rng);
        std::set<size_t> chosen;
        std::uniform_int_distribution<size_t> pick(0, universe.size() - 1);
        while (static_cast<int>(chosen.size()) < m) chosen.insert(pick(rng));
        ReactionNetwork net;
        net.species_names = {"X1", "X2"};
        net.zero_one = true;
        for (size_t idx : chosen) net.reactions.push_back(universe[idx]);
        if (stoichiometric_data(net).rank_N != 2) continue;
        ++tested;

        QuadraticReduction red = two_species_reduce(net);
        std::uniform_int_distribution<int> num(1, 9), den(1, 4);
        std::vector<Rational> kappa;
        for (int j = 0; j < m; ++j) kappa.push_back(rat(num(rng), den(rng)));
        TwoSpeciesVerdict verdict = two_species_verdict(red, kappa);

        std::vector<Rational> full(12, Rational(0));
        for (size_t j = 0; j < kappa.size(); ++j)
            full[static_cast<size_t>(red.slot[j])] = kappa[j];
        UniPoly quad({red.C3r.evaluate(full), red.C2r.evaluate(full), red.C1r.evaluate(full)});

        bool degenerate_elimination =
            red.denominator_degenerate ||
            (!red.present[0] && !red.present[2] && !red.present[7] && !red.present[8]);
        if (degenerate_elimination) {
            // x1 cannot be eliminated; there is no positive steady state.
            CHECK(verdict == TwoSpeciesVerdict::no_positive);
        } else if (quad.is_zero()) {
            CHECK(verdict == TwoSpeciesVerdict::degenerate_continuum);
        } else {
            size_t roots =
                quad.squarefree_part().isolate_positive_roots(rat(1, 1000000)).size();
            if (verdict == TwoSpeciesVerdict::one_nondegenerate)
                CHECK(roots == 1);
            else
                CHECK(roots == 0);
        }
    }
}

TEST_CASE("conservation-pair classes over the catalog") {
    auto cls_of = [](const char* name) {
        return classify_conservation_pair(stoichiometric_data(load_network(name))).cls;
    };
    CHECK(cls_of("g1max.crn") == MaxNetClass::G1);
    for (const char* name : {"g21.crn", "g22.crn", "g23.crn"}) {
        CAPTURE(name);
        CHECK(cls_of(name) == MaxNetClass::G2);
    }
    for (const char* name :
         {"g31.crn", "g32.crn", "g33.crn", "g34.crn", "g35.crn", "g36.crn"}) {
        CAPTURE(name);
        CHECK(cls_of(name) == MaxNetClass::G3);
    }

    MaximumClass g1 = classify_conservation_pair(stoichiometric_data(load_network("g1max.crn")));
    CHECK(g1.a == rat(1, 2));
    CHECK(g1.b == rat(1, 2));

    // The first catalog G3 network conserves x1 + x2 + x3.
    MaximumClass g31 = classify_conservation_pair(stoichiometric_data(load_network("g31.crn")));
    CHECK(g31.a == rat(-1));
    CHECK(g31.b == rat(-1));
}

TEST_CASE("pair (2,1) is relabeled to halves") {
    // Forge the data: conservation row (1, -2, -1), i.e. N1 = 2 N2 + N3.
    StoichiometricData sd;
    sd.N = {{2, 1}, {1, 0}, {0, 1}};
    sd.rank_N = 2;
    sd.W = {{rat(1), rat(-2), rat(-1)}};
    sd.leading_indices = {0};
    MaximumClass mc = classify_conservation_pair(sd);
    CHECK(abs(mc.a) == rat(1, 2));
    CHECK(abs(mc.b) == rat(1, 2));
    CHECK(mc.cls == MaxNetClass::G3);
}

TEST_CASE("classification is invariant under relabeling") {
    for (const char* name : {"g1max.crn", "g21.crn", "g31.crn", "g35.crn"}) {
        CAPTURE(name);
        ReactionNetwork net = load_network(name);
        MaxNetClass base =
            classify_conservation_pair(stoichiometric_data(net)).cls;
        // Swap species 1 and 3.
        ReactionNetwork swapped = net;
        for (Reaction& r : swapped.reactions) {
            std::swap(r.reactant.coefficients[0], r.reactant.coefficients[2]);
            std::swap(r.product.coefficients[0], r.product.coefficients[2]);
        }
        CHECK(classify_conservation_pair(stoichiometric_data(swapped)).cls == base);
    }
}

TEST_CASE("maximal closure reproduces the catalog forms") {
    {
        ReactionNetwork gen = parse_network("X1 + X2 + X3 -> 0\nX1 + X2 -> X1 + X3");
        ReactionNetwork closure = maximal_closure(gen);
        CHECK(closure.reaction_count() == 6);
        CHECK(format_network(canonical_form(closure)) ==
              format_network(canonical_form(load_network("g1max.crn"))));
        CHECK(is_maximum_network(closure));
    }
    {
        ReactionNetwork sub = load_network("g21_degenerate_sub.crn");
        ReactionNetwork closure = maximal_closure(sub);
        CHECK(format_network(canonical_form(closure)) ==
              format_network(canonical_form(load_network("g21.crn"))));
    }
    {
        ReactionNetwork g35 = load_network("g35.crn");
        CHECK(is_maximum_network(g35));
        ReactionNetwork closure = maximal_closure(g35);
        CHECK(closure.reaction_count() == g35.reaction_count());
    }
    CHECK(!is_maximum_network(parse_network("X1 + X2 + X3 -> 0\nX1 + X2 -> X1 + X3")));
}

TEST_CASE("catalog matching") {
    CHECK(catalog_match(load_network("g33.crn")) == std::optional<std::string>("g33"));
    CHECK(catalog_match(load_network("g1max.crn")) == std::optional<std::string>("g1max"));

    ReactionNetwork swapped = load_network("g33.crn");
    for (Reaction& r : swapped.reactions) {
        std::swap(r.reactant.coefficients[1], r.reactant.coefficients[2]);
        std::swap(r.product.coefficients[1], r.product.coefficients[2]);
    }
    CHECK(catalog_match(swapped) == std::optional<std::string>("g33"));

    // g35/g36 and g21/g22 are species relabelings of one another; the exact
    // labeled form decides between them.
    CHECK(catalog_match(load_network("g35.crn")) == std::optional<std::string>("g35"));
    CHECK(catalog_match(load_network("g36.crn")) == std::optional<std::string>("g36"));
    CHECK(catalog_match(load_network("g21.crn")) == std::optional<std::string>("g21"));
    CHECK(catalog_match(load_network("g22.crn")) == std::optional<std::string>("g22"));

    CHECK(!catalog_match(load_network("example5.crn")).has_value());
}

TEST_CASE("degeneracy verdicts") {
    {
        DegeneracyResult res = degeneracy_verdict(load_network("g21_degenerate_sub.crn"));
        CHECK(res.verdict == DegeneracyVerdict::only_degenerate);
    }
    {
        DegeneracyResult res = degeneracy_verdict(load_network("g35.crn"));
        CHECK(res.verdict == DegeneracyVerdict::nondegenerate_possible);
        REQUIRE(res.sign.has_value());
        CHECK(res.sign->verdict == SignVerdict::positive_certified);
    }
    {
        DegeneracyResult res = degeneracy_verdict(parse_network("X1 -> X2\nX1 -> X3"));
        CHECK(res.verdict == DegeneracyVerdict::no_positive_flux);
    }
}
