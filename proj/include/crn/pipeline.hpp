#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/solver.hpp"

namespace crn {

// Screening pipeline over a zero-one network family:
// enumerate -> injectivity screen -> multistationarity search (randomized and
// structured parameter sampling) -> stability check -> per-network record.
struct PipelineConfig {
    int species = 3;
    int reactions = 5;
    std::optional<int> rank_filter;
    bool canonical_only = true;
    // Deterministic random subsample of the enumerated family (reservoir).
    std::optional<std::uint64_t> subsample;

    int sample_count = 50;  // kappa samples per network
    // Log-uniform sampling bounds for rates and for the positive point that
    // generates the total constants.
    Rational sample_lo = rat(1, 100);
    Rational sample_hi = rat(100);
    // Structured seeds tried before random sampling (e.g. known witnesses);
    // entries with the wrong length are skipped.
    std::vector<std::vector<Rational>> extra_kappa;

    std::uint64_t seed = 1;
    int parallelism = 0;            // 0: CRN_WORKERS env var, then hardware
    double timeout_seconds = 10.0;  // per-network budget
};

enum class PipelineStage {
    screened_injective,
    no_multistationarity_found,
    multistationary,
    multistable,
    timed_out
};

std::string stage_name(PipelineStage stage);

struct NetworkVerdictRecord {
    std::string canonical_text;
    PipelineStage stage = PipelineStage::no_multistationarity_found;
    int rank = 0;

    // diagnostics
    int ray_count = 0;
    std::string sign_verdict;  // rank-2 certificate outcome, when computed
    std::size_t b_terms = 0;
    std::size_t b_tilde_terms = 0;
    int theta_size = 0;
    int samples_run = 0;

    // best witness seen (re-validated by a final solve)
    int max_nondegenerate = 0;
    int max_stable = 0;
    std::optional<std::vector<Rational>> witness_kappa;
    std::optional<std::vector<Rational>> witness_c;
    std::vector<SteadyStateSolution> witness_solutions;
};

struct PipelineSummary {
    std::uint64_t enumerated = 0;  // networks passing the filters
    std::uint64_t analyzed = 0;
    std::uint64_t screened_injective = 0;
    std::uint64_t no_multistationarity_found = 0;
    std::uint64_t multistationary = 0;
    std::uint64_t multistable = 0;
    std::uint64_t timed_out = 0;
};

// Worker count after the CRN_WORKERS override.
int worker_count(const PipelineConfig& cfg);

// Single-network analysis under the pipeline's sampling policy.  The record
// depends only on the network's canonical form and the config, never on
// scheduling.
NetworkVerdictRecord pipeline_analyze_network(const ReactionNetwork& net,
                                              const PipelineConfig& cfg);

// Enumerates the family, fans the analyses out over workers, and calls the
// sink once per network from the calling thread in a deterministic order.
PipelineSummary run_pipeline(const PipelineConfig& cfg,
                             const std::function<void(const NetworkVerdictRecord&)>& sink);

}  // namespace crn
