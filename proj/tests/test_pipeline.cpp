#include "doctest.h"

#include <cstdlib>

#include "crn/pipeline.hpp"
#include "crn/report.hpp"
#include "fixtures.hpp"

using namespace crn;
using nlohmann::json;

TEST_CASE("analyze report: one-dimensional network") {
    json rep = analyze_report(load_network("example2.crn"),
                              std::vector<Rational>{rat(1), rat(1)},
                              std::vector<Rational>{rat(2), rat(0)});
    CHECK(rep["schema_version"] == kReportSchemaVersion);
    CHECK(rep["rank"] == 1);
    CHECK(rep["conservation_laws"] == 2);
    CHECK(rep["injectivity"] == "injective");
    CHECK(rep["one_dimensional"]["verdict"] == "one_stable_steady_state");
    CHECK(rep["one_dimensional"]["stable"] == true);
    CHECK(rep["one_dimensional"]["steady_state"].size() == 3);
    CHECK(rep["one_dimensional"]["region"].size() == 2);
    // The solver agrees through the generic path.
    CHECK(rep["steady_states"]["status"] == "ok");
    CHECK(rep["steady_states"]["solutions"].size() == 1);
    CHECK(rep["steady_states"]["solutions"][0]["stability"] == "stable");
}

TEST_CASE("analyze report: rank-two three-species certificate") {
    json rep = analyze_report(load_network("g35.crn"), std::nullopt, std::nullopt);
    CHECK(rep["rank"] == 2);
    CHECK(rep["flux_cone"]["extreme_rays"] == 28);
    const json& three = rep["three_species_rank_two"];
    CHECK(three["degeneracy"] == "nondegenerate_possible");
    CHECK(three["sign"]["verdict"] == "positive_certified");
    CHECK(three["sign"]["b_terms"] == 972);
    CHECK(three["sign"]["b_tilde_terms"] == 114);
    CHECK(three["sign"]["theta_size"] == 16);
    CHECK(three["catalog_id"] == "g35");
    CHECK(three["is_maximum"] == true);
    CHECK(three["conservation_pair"]["class"] == "G3");
}

TEST_CASE("analyze report: two-species degenerate continuum") {
    json rep = analyze_report(
        load_network("example3.crn"),
        std::vector<Rational>{rat(1), rat(1), rat(2), rat(3), rat(5), rat(5)}, std::nullopt);
    CHECK(rep["two_species"]["verdict"] == "degenerate_continuum");
    CHECK(rep["steady_states"]["status"] == "degenerate_continuum");
}

TEST_CASE("analyze report: input validation") {
    ReactionNetwork big;
    big.species_names = {"X1", "X2", "X3", "X4", "X5"};
    big.reactions.push_back({Complex{{1, 0, 0, 0, 0}}, Complex{{0, 1, 0, 0, 0}}});
    CHECK_THROWS_AS(analyze_report(big, std::nullopt, std::nullopt), std::invalid_argument);

    CHECK_THROWS_AS(analyze_report(load_network("example2.crn"),
                                   std::vector<Rational>{rat(1)}, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(analyze_report(load_network("example2.crn"), std::nullopt,
                                   std::vector<Rational>{rat(1)}),
                    std::invalid_argument);
}

TEST_CASE("pipeline single network: multistationary but not multistable") {
    PipelineConfig cfg;
    cfg.sample_count = 4;
    cfg.seed = 7;
    cfg.extra_kappa = {{rat(1), rat(3), rat(2), rat(1), rat(1)}};
    NetworkVerdictRecord rec = pipeline_analyze_network(load_network("example5.crn"), cfg);
    CHECK(rec.stage == PipelineStage::multistationary);
    CHECK(rec.max_nondegenerate == 2);
    CHECK(rec.max_stable == 1);
    REQUIRE(rec.witness_kappa.has_value());
    CHECK(rec.witness_solutions.size() == 2);
}

TEST_CASE("pipeline single network: multistable with the witness seed") {
    PipelineConfig cfg;
    cfg.sample_count = 2;
    cfg.seed = 7;
    cfg.extra_kappa = {{rat(5765, 16), rat(1655, 65536), rat(1, 2), rat(1, 2), rat(1, 2),
                        rat(1, 2)}};
    NetworkVerdictRecord rec = pipeline_analyze_network(load_network("example6.crn"), cfg);
    CHECK(rec.stage == PipelineStage::multistable);
    CHECK(rec.max_stable == 2);
    CHECK(rec.max_nondegenerate == 3);
}

TEST_CASE("pipeline determinism and stage bookkeeping") {
    PipelineConfig cfg;
    cfg.species = 2;
    cfg.reactions = 3;
    cfg.canonical_only = true;
    cfg.sample_count = 4;
    cfg.seed = 31337;
    cfg.parallelism = 4;

    auto run = [&] {
        std::vector<NetworkVerdictRecord> records;
        PipelineSummary sum = run_pipeline(cfg, [&](const NetworkVerdictRecord& r) {
            records.push_back(r);
        });
        return std::make_pair(sum, records);
    };
    auto [sum1, rec1] = run();
    auto [sum2, rec2] = run();

    CHECK(sum1.enumerated == sum2.enumerated);
    CHECK(sum1.analyzed == rec1.size());
    CHECK(sum1.screened_injective == sum2.screened_injective);
    CHECK(sum1.multistationary == sum2.multistationary);
    CHECK(sum1.multistable == sum2.multistable);
    REQUIRE(rec1.size() == rec2.size());
    for (size_t i = 0; i < rec1.size(); ++i) {
        CHECK(rec1[i].canonical_text == rec2[i].canonical_text);
        CHECK(rec1[i].stage == rec2[i].stage);
        CHECK(rec1[i].max_nondegenerate == rec2[i].max_nondegenerate);
        CHECK(rec1[i].witness_kappa == rec2[i].witness_kappa);
    }
    CHECK(sum1.analyzed == sum1.screened_injective + sum1.no_multistationarity_found +
                               sum1.multistationary + sum1.multistable + sum1.timed_out);
    // Two-species rank-two zero-one networks are never multistable.
    CHECK(sum1.multistable == 0);
}

TEST_CASE("pipeline: full-rank three-reaction networks have no positive states") {
    PipelineConfig cfg;
    cfg.species = 3;
    cfg.reactions = 3;
    cfg.rank_filter = 3;
    cfg.canonical_only = true;
    cfg.subsample = 40;
    cfg.sample_count = 3;
    cfg.seed = 9;

    PipelineSummary sum = run_pipeline(cfg, [&](const NetworkVerdictRecord& rec) {
        CHECK(rec.max_nondegenerate == 0);
        CHECK((rec.stage == PipelineStage::screened_injective ||
               rec.stage == PipelineStage::no_multistationarity_found));
    });
    CHECK(sum.analyzed == 40);
    CHECK(sum.enumerated > 40);
}

TEST_CASE("worker count env override") {
    setenv("CRN_WORKERS", "3", 1);
    PipelineConfig cfg;
    cfg.parallelism = 9;
    CHECK(worker_count(cfg) == 3);
    unsetenv("CRN_WORKERS");
    CHECK(worker_count(cfg) == 9);
}
