#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "crn/lowdim.hpp"
#include "crn/solver.hpp"
#include "crn/symbolics.hpp"
#include "crn/unipoly.hpp"
#include "fixtures.hpp"

using namespace crn;

namespace {

double mid(const Interval& iv) { return iv.mid().get_d(); }

bool encloses(const std::vector<Interval>& x, const std::vector<Rational>& v) {
    if (x.size() != v.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].contains(v[i])) return false;
    return true;
}

// Interval evaluation of the augmented system h over a solution enclosure;
// every component must contain zero.
bool residual_contains_zero(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                            const std::vector<Rational>& c, const std::vector<Interval>& x) {
    StoichiometricData sd = stoichiometric_data(net);
    VarUniverse u{sd.reaction_count(), sd.species_count(), 0, sd.deficiency_dim()};
    AugmentedSystem aug = build_h(build_f(sd, u), sd);
    std::vector<Interval> box(static_cast<size_t>(u.nvars()), Interval(Rational(0)));
    for (int j = 0; j < u.m; ++j) box[static_cast<size_t>(u.kappa(j))] = Interval(kappa[static_cast<size_t>(j)]);
    for (int k = 0; k < u.d; ++k) box[static_cast<size_t>(u.c(k))] = Interval(c[static_cast<size_t>(k)]);
    for (int i = 0; i < u.s; ++i) box[static_cast<size_t>(u.x(i))] = x[static_cast<size_t>(i)];
    for (const Poly& hi : aug.h)
        if (!hi.evaluate_interval(box).contains_zero()) return false;
    return true;
}

// Independent double-precision oracle for d = 0 networks: multistart Newton
// from a log grid over [1e-3, 1e3]^s, deduplicated.
std::vector<std::vector<double>> newton_oracle(const ReactionNetwork& net,
                                               const std::vector<double>& kappa) {
    StoichiometricData sd = stoichiometric_data(net);
    int s = sd.species_count(), m = sd.reaction_count();
    REQUIRE(sd.rank_N == s);

    auto f = [&](const std::vector<double>& x) {
        std::vector<double> out(static_cast<size_t>(s), 0.0);
        for (int j = 0; j < m; ++j) {
            double v = kappa[static_cast<size_t>(j)];
            for (int k = 0; k < s; ++k)
                for (int e = 0; e < sd.Y[static_cast<size_t>(k)][static_cast<size_t>(j)]; ++e)
                    v *= x[static_cast<size_t>(k)];
            for (int i = 0; i < s; ++i)
                out[static_cast<size_t>(i)] += sd.N[static_cast<size_t>(i)][static_cast<size_t>(j)] * v;
        }
        return out;
    };

    std::vector<std::vector<double>> roots;
    int grid = s == 2 ? 24 : 12;
    std::vector<int> idx(static_cast<size_t>(s), 0);
    while (true) {
        std::vector<double> x(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i)
            x[static_cast<size_t>(i)] = std::pow(10.0, -3.0 + 6.0 * idx[static_cast<size_t>(i)] / (grid - 1));

        bool ok = false;
        for (int it = 0; it < 80; ++it) {
            std::vector<double> fx = f(x);
            double norm = 0;
            for (double v : fx) norm += std::fabs(v);
            if (norm < 1e-11) {
                ok = true;
                break;
            }
            // numeric Jacobian
            std::vector<std::vector<double>> J(static_cast<size_t>(s),
                                               std::vector<double>(static_cast<size_t>(s)));
            for (int j = 0; j < s; ++j) {
                double h = std::max(1e-8, 1e-8 * std::fabs(x[static_cast<size_t>(j)]));
                std::vector<double> xp = x;
                xp[static_cast<size_t>(j)] += h;
                std::vector<double> fp = f(xp);
                for (int i = 0; i < s; ++i)
                    J[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        (fp[static_cast<size_t>(i)] - fx[static_cast<size_t>(i)]) / h;
            }
            // Gaussian elimination for J dx = -f
            std::vector<double> rhs(static_cast<size_t>(s));
            for (int i = 0; i < s; ++i) rhs[static_cast<size_t>(i)] = -fx[static_cast<size_t>(i)];
            bool singular = false;
            for (int col = 0; col < s && !singular; ++col) {
                int piv = col;
                for (int row = col + 1; row < s; ++row)
                    if (std::fabs(J[static_cast<size_t>(row)][static_cast<size_t>(col)]) >
                        std::fabs(J[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
                        piv = row;
                if (std::fabs(J[static_cast<size_t>(piv)][static_cast<size_t>(col)]) < 1e-14) {
                    singular = true;
                    break;
                }
                std::swap(J[static_cast<size_t>(piv)], J[static_cast<size_t>(col)]);
                std::swap(rhs[static_cast<size_t>(piv)], rhs[static_cast<size_t>(col)]);
                for (int row = col + 1; row < s; ++row) {
                    double fac = J[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                                 J[static_cast<size_t>(col)][static_cast<size_t>(col)];
                    for (int cc = col; cc < s; ++cc)
                        J[static_cast<size_t>(row)][static_cast<size_t>(cc)] -=
                            fac * J[static_cast<size_t>(col)][static_cast<size_t>(cc)];
                    rhs[static_cast<size_t>(row)] -= fac * rhs[static_cast<size_t>(col)];
                }
            }
            if (singular) break;
            std::vector<double> dx(static_cast<size_t>(s));
            for (int i = s - 1; i >= 0; --i) {
                double v = rhs[static_cast<size_t>(i)];
                for (int j = i + 1; j < s; ++j)
                    v -= J[static_cast<size_t>(i)][static_cast<size_t>(j)] * dx[static_cast<size_t>(j)];
                dx[static_cast<size_t>(i)] = v / J[static_cast<size_t>(i)][static_cast<size_t>(i)];
            }
            for (int i = 0; i < s; ++i) {
                x[static_cast<size_t>(i)] += dx[static_cast<size_t>(i)];
                if (!(x[static_cast<size_t>(i)] > 1e-12) || !(x[static_cast<size_t>(i)] < 1e9))
                    x[static_cast<size_t>(i)] = 1e-12;  // clamp, keep iterating
            }
        }
        if (ok) {
            bool positive = true, fresh = true;
            for (double v : x)
                if (!(v > 1e-9)) positive = false;
            for (const auto& r : roots) {
                double d = 0;
                for (int i = 0; i < s; ++i)
                    d += std::fabs(r[static_cast<size_t>(i)] - x[static_cast<size_t>(i)]) /
                         std::max(1.0, std::fabs(r[static_cast<size_t>(i)]));
                if (d < 1e-6) fresh = false;
            }
            if (positive && fresh) roots.push_back(x);
        }

        int pos = 0;
        while (pos < s && ++idx[static_cast<size_t>(pos)] == grid) {
            idx[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == s) break;
    }
    return roots;
}

}  // namespace

TEST_CASE("Hurwitz determinants of fixed polynomials") {
    // lambda^3 + 2 lambda^2 + 3 lambda + 4, ascending coefficients
    std::vector<Interval> b = {Interval(rat(4)), Interval(rat(3)), Interval(rat(2)),
                               Interval(rat(1))};
    auto H = hurwitz_determinants(b);
    REQUIRE(H.size() == 3);
    CHECK(H[0].is_point());
    CHECK(H[0].lo == 2);
    CHECK(H[1].lo == 2);
    CHECK(H[2].lo == 8);

    // lambda^2 + 3 lambda + 5: both determinants positive
    auto H2 = hurwitz_determinants({Interval(rat(5)), Interval(rat(3)), Interval(rat(1))});
    REQUIRE(H2.size() == 2);
    CHECK(H2[0].lo == 3);
    CHECK(H2[1].lo == 15);
}

TEST_CASE("bistable three-species network: two exact solutions") {
    ReactionNetwork net = load_network("example5.crn");
    std::vector<Rational> kappa = {rat(1), rat(3), rat(2), rat(1), rat(1)};
    SolveResult res = solve_positive_steady_states(net, kappa, {});
    REQUIRE(res.status == SolveStatus::ok);
    REQUIRE(res.solutions.size() == 2);

    const SteadyStateSolution* low = nullptr;
    const SteadyStateSolution* high = nullptr;
    for (const auto& sol : res.solutions) {
        if (encloses(sol.x, {rat(1), rat(1), rat(1)})) low = &sol;
        if (encloses(sol.x, {rat(2), rat(2), rat(2)})) high = &sol;
    }
    REQUIRE(low != nullptr);
    REQUIRE(high != nullptr);

    CHECK(low->certified);
    CHECK(high->certified);
    CHECK(low->nondegenerate);
    CHECK(high->nondegenerate);
    CHECK(low->stability == Stability::stable);
    CHECK(high->stability == Stability::unstable);
    // opposite determinant signs across the two branches
    CHECK(low->det_jac_f_sign * high->det_jac_f_sign == -1);
    CHECK(residual_contains_zero(net, kappa, {}, low->x));
    CHECK(residual_contains_zero(net, kappa, {}, high->x));

    // Hurwitz view of the unstable branch: not all determinants positive.
    HurwitzData hd = hurwitz_data(net, kappa, high->x);
    bool some_nonpositive = false;
    for (const Interval& H : hd.hurwitz_determinants)
        if (!(H.lo > 0)) some_nonpositive = true;
    CHECK(some_nonpositive);
    // leading coefficient of det(lambda I - Jac_f) is 1
    CHECK(hd.char_poly.back().lo == 1);
    CHECK(hd.char_poly.back().hi == 1);
}

TEST_CASE("tristable six-reaction network matches ten-digit references") {
    ReactionNetwork net = load_network("example6.crn");
    std::vector<Rational> kappa = {rat(5765, 16),  rat(1655, 65536), rat(1, 2),
                                   rat(1, 2),      rat(1, 2),        rat(1, 2)};
    SolveResult res = solve_positive_steady_states(net, kappa, {});
    REQUIRE(res.status == SolveStatus::ok);
    REQUIRE(res.solutions.size() == 3);

    struct Ref {
        double x1, x2, x3;
        Stability st;
    };
    std::vector<Ref> refs = {
        {0.8340329166, 0.2942918947, 0.001663824382, Stability::stable},
        {0.05999575106, 0.02912421107, 0.02312970964, Stability::unstable},
        {0.05546474050, 0.02698403889, 0.02501921562, Stability::stable},
    };
    for (const Ref& ref : refs) {
        const SteadyStateSolution* match = nullptr;
        for (const auto& sol : res.solutions)
            if (std::fabs(mid(sol.x[0]) - ref.x1) < 1e-6 &&
                std::fabs(mid(sol.x[1]) - ref.x2) < 1e-6 &&
                std::fabs(mid(sol.x[2]) - ref.x3) < 1e-6)
                match = &sol;
        CAPTURE(ref.x1);
        REQUIRE(match != nullptr);
        CHECK(match->nondegenerate);
        CHECK(match->stability == ref.st);
        CHECK(residual_contains_zero(net, kappa, {}, match->x));
    }
}

TEST_CASE("rank-one network with conservation laws") {
    ReactionNetwork net = load_network("example2.crn");
    SolveResult res =
        solve_positive_steady_states(net, {rat(1), rat(1)}, {rat(2), rat(0)});
    REQUIRE(res.status == SolveStatus::ok);
    REQUIRE(res.solutions.size() == 1);
    const auto& sol = res.solutions[0];
    CHECK(encloses(sol.x, {rat(1), rat(1), rat(1)}));
    CHECK(sol.nondegenerate);
    CHECK(sol.det_jac_h_sign == -1);
    CHECK(sol.stability == Stability::stable);
    CHECK(residual_contains_zero(net, {rat(1), rat(1)}, {rat(2), rat(0)}, sol.x));

    // simple reversible isomerization: kappa = (1,2), total 3 -> x = (2,1)
    ReactionNetwork iso = parse_network("X1 -> X2\nX2 -> X1");
    SolveResult r2 = solve_positive_steady_states(iso, {rat(1), rat(2)}, {rat(3)});
    REQUIRE(r2.solutions.size() == 1);
    CHECK(encloses(r2.solutions[0].x, {rat(2), rat(1)}));
    CHECK(r2.solutions[0].stability == Stability::stable);
}

TEST_CASE("degenerate continuum and empty solution sets") {
    ReactionNetwork net = load_network("example3.crn");
    // linear coefficient vanishes: a line of steady states
    SolveResult cont = solve_positive_steady_states(
        net, {rat(1), rat(1), rat(2), rat(3), rat(5), rat(5)}, {});
    CHECK(cont.status == SolveStatus::degenerate_continuum);

    SolveResult none = solve_positive_steady_states(
        net, {rat(1), rat(2), rat(2), rat(3), rat(5), rat(5)}, {});
    CHECK(none.status == SolveStatus::ok);
    CHECK(none.solutions.empty());

    // irreversible conversion: no steady state in any positive class
    ReactionNetwork irr = parse_network("X1 -> X2");
    SolveResult r = solve_positive_steady_states(irr, {rat(1)}, {rat(5)});
    CHECK(r.status == SolveStatus::ok);
    CHECK(r.solutions.empty());
}

TEST_CASE("solver agrees with a multistart Newton oracle on random two-species networks") {
    std::mt19937_64 rng(20250817);
    auto universe = reaction_universe(2);
    int tested = 0;
    while (tested < 60) {
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

        std::uniform_int_distribution<int> num(1, 9), den(1, 4);
        std::vector<Rational> kappa;
        std::vector<double> kd;
        for (int j = 0; j < m; ++j) {
            kappa.push_back(rat(num(rng), den(rng)));
            kd.push_back(kappa.back().get_d());
        }

        SolveResult res = solve_positive_steady_states(net, kappa, {});
        if (res.status != SolveStatus::ok) continue;  // continuum: no finite count
        ++tested;

        auto oracle = newton_oracle(net, kd);
        CAPTURE(format_network(net));
        CHECK(res.solutions.size() == oracle.size());

        for (const auto& root : oracle) {
            bool matched = false;
            for (const auto& sol : res.solutions)
                if (std::fabs(mid(sol.x[0]) - root[0]) < 1e-6 &&
                    std::fabs(mid(sol.x[1]) - root[1]) < 1e-6)
                    matched = true;
            CHECK(matched);
        }
        for (const auto& sol : res.solutions) {
            CHECK(residual_contains_zero(net, kappa, {}, sol.x));
            CHECK(sol.x[0].strictly_positive());
            CHECK(sol.x[1].strictly_positive());
            // rank-two zero-one networks: nondegenerate implies stable
            if (sol.nondegenerate) {
                CHECK(sol.stability == Stability::stable);
                CHECK(sol.det_jac_h_sign == 1);
            }
        }
    }
}

TEST_CASE("solver count matches the quadratic-reduction verdict") {
    std::mt19937_64 rng(99017);
    auto universe = reaction_universe(2);
    int tested = 0;
    while (tested < 80) {
        std::uniform_int_distribution<int> mdist(2, 7);
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

        std::uniform_int_distribution<int> num(1, 9), den(1, 4);
        std::vector<Rational> kappa;
        for (int j = 0; j < m; ++j) kappa.push_back(rat(num(rng), den(rng)));

        TwoSpeciesVerdict verdict = two_species_verdict(two_species_reduce(net), kappa);
        SolveResult res = solve_positive_steady_states(net, kappa, {});
        CAPTURE(format_network(net));

        if (verdict == TwoSpeciesVerdict::degenerate_continuum) {
            CHECK(res.status == SolveStatus::degenerate_continuum);
        } else if (verdict == TwoSpeciesVerdict::no_positive) {
            REQUIRE(res.status == SolveStatus::ok);
            CHECK(res.solutions.empty());
        } else {
            REQUIRE(res.status == SolveStatus::ok);
            CHECK(res.solutions.size() == 1);
        }
    }
}

TEST_CASE("rank-one solutions always have a negative augmented determinant") {
    std::mt19937_64 rng(5151);
    auto universe = reaction_universe(3);
    int tested = 0;
    while (tested < 40) {
        std::uniform_int_distribution<int> mdist(1, 4);
        int m = mdist(rng);
        std::set<size_t> chosen;
        std::uniform_int_distribution<size_t> pick(0, universe.size() - 1);
        while (static_cast<int>(chosen.size()) < m) chosen.insert(pick(rng));
        ReactionNetwork net;
        net.species_names = {"X1", "X2", "X3"};
        net.zero_one = true;
        for (size_t idx : chosen) net.reactions.push_back(universe[idx]);
        if (stoichiometric_data(net).rank_N != 1) continue;
        ++tested;

        std::uniform_int_distribution<int> num(1, 9), den(1, 4), cd(1, 6);
        std::vector<Rational> kappa;
        for (int j = 0; j < m; ++j) kappa.push_back(rat(num(rng), den(rng)));
        std::vector<Rational> c = {rat(cd(rng)), rat(cd(rng))};

        SolveResult res = solve_positive_steady_states(net, kappa, c);
        if (res.status != SolveStatus::ok) continue;
        for (const auto& sol : res.solutions) {
            CAPTURE(format_network(net));
            CHECK(sol.det_jac_h_sign == -1);
            CHECK(sol.stability == Stability::stable);
            CHECK(residual_contains_zero(net, kappa, c, sol.x));
        }
    }
}
