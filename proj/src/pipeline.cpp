#include "crn/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "crn/fluxcone.hpp"
#include "crn/sign_analysis.hpp"
#include "crn/symbolics.hpp"

namespace crn {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

// Log-uniform rational sample with a fixed small denominator, keeping the
// exact solver's coefficient sizes bounded.
Rational sample_log_uniform(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
    std::uniform_real_distribution<double> u(std::log(lo.get_d()), std::log(hi.get_d()));
    double v = std::exp(u(rng));
    long long num = std::llround(v * 64.0);
    if (num < 1) num = 1;
    return rat(num, 64);
}

std::vector<Rational> sample_vector(std::mt19937_64& rng, int n, const Rational& lo,
                                    const Rational& hi) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(sample_log_uniform(rng, lo, hi));
    return out;
}

// Total constants of the class through a random positive point, so the
// sampled class is never empty.
std::vector<Rational> sample_totals(std::mt19937_64& rng, const StoichiometricData& sd,
                                    const Rational& lo, const Rational& hi) {
    std::vector<Rational> x0 = sample_vector(rng, sd.species_count(), lo, hi);
    std::vector<Rational> c;
    for (const auto& row : sd.W) {
        Rational acc = 0;
        for (size_t j = 0; j < row.size(); ++j) acc += row[j] * x0[j];
        c.push_back(acc);
    }
    return c;
}

struct SampleOutcome {
    std::vector<Rational> kappa;
    std::vector<Rational> c;
    int nondegenerate = 0;
    int stable = 0;
    bool solved = false;
};

SampleOutcome run_sample(const ReactionNetwork& net, std::vector<Rational> kappa,
                         std::vector<Rational> c) {
    SampleOutcome out;
    out.kappa = std::move(kappa);
    out.c = std::move(c);
    SolveResult res;
    try {
        res = solve_positive_steady_states(net, out.kappa, out.c);
    } catch (const std::exception&) {
        return out;
    }
    if (res.status != SolveStatus::ok) return out;
    out.solved = true;
    for (const auto& sol : res.solutions) {
        if (sol.nondegenerate) ++out.nondegenerate;
        if (sol.stability == Stability::stable) ++out.stable;
    }
    return out;
}

std::vector<Rational> midpoint(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) / 2;
    return out;
}

}  // namespace

std::string stage_name(PipelineStage stage) {
    switch (stage) {
        case PipelineStage::screened_injective: return "screened-injective";
        case PipelineStage::no_multistationarity_found: return "no-multistationarity-found";
        case PipelineStage::multistationary: return "multistationary";
        case PipelineStage::multistable: return "multistable";
        default: return "timed-out";
    }
}

int worker_count(const PipelineConfig& cfg) {
    if (const char* env = std::getenv("CRN_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    if (cfg.parallelism > 0) return cfg.parallelism;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

NetworkVerdictRecord pipeline_analyze_network(const ReactionNetwork& net,
                                              const PipelineConfig& cfg) {
    auto start = Clock::now();
    auto expired = [&] {
        return std::chrono::duration<double>(Clock::now() - start).count() > cfg.timeout_seconds;
    };

    NetworkVerdictRecord rec;
    rec.canonical_text = format_network(canonical_form(net));
    StoichiometricData sd = stoichiometric_data(net);
    rec.rank = sd.rank_N;
    int m = sd.reaction_count(), s = sd.species_count(), d = sd.deficiency_dim();

    // Step 1: injectivity screen — injective networks admit at most one
    // positive steady state per class.
    VarUniverse u{m, s, 0, d};
    if (injectivity_screen(build_f(sd, u)) == InjectivityVerdict::injective) {
        rec.stage = PipelineStage::screened_injective;
        return rec;
    }

    ExtremeRaySet rays = extreme_rays(sd);
    rec.ray_count = rays.count();
    if (!strictly_positive_flux_exists(rays, m)) {
        rec.sign_verdict = "no_positive_flux";
        rec.stage = PipelineStage::no_multistationarity_found;
        return rec;
    }

    if (rec.rank == 1) {
        // One-dimensional networks have at most one positive steady state per
        // class; nothing to search for.
        rec.sign_verdict = "rank_one";
        rec.stage = PipelineStage::no_multistationarity_found;
        return rec;
    }

    if (rec.rank == 2 && rays.count() >= 1) {
        VarUniverse su{m, s, rays.count(), d};
        TransformedJacobian tj = build_transformed_jacobian(sd, rays, su);
        BPolynomialBundle bundle = build_B_bundle(tj, rays);
        SignReport sign = check_sign_criterion(bundle);
        rec.b_terms = sign.b_terms;
        rec.b_tilde_terms = sign.b_tilde_terms;
        rec.theta_size = sign.theta_size;
        switch (sign.verdict) {
            case SignVerdict::positive_certified: rec.sign_verdict = "positive_certified"; break;
            case SignVerdict::zero_polynomial: rec.sign_verdict = "zero_polynomial"; break;
            default: rec.sign_verdict = "inconclusive"; break;
        }
        if (sign.verdict == SignVerdict::positive_certified) {
            // det Jac_h > 0 at every positive steady state: at most one
            // nondegenerate steady state per class.
            rec.stage = PipelineStage::no_multistationarity_found;
            return rec;
        }
    }

    // Step 2 substitute: randomized + structured parameter search.
    std::mt19937_64 rng(cfg.seed ^ fnv1a(rec.canonical_text));
    std::vector<SampleOutcome> outcomes;

    auto consider = [&](SampleOutcome out) {
        ++rec.samples_run;
        if (!out.solved) return;
        if (out.nondegenerate > rec.max_nondegenerate ||
            (out.nondegenerate == rec.max_nondegenerate && out.stable > rec.max_stable)) {
            rec.max_nondegenerate = out.nondegenerate;
            rec.max_stable = out.stable;
            rec.witness_kappa = out.kappa;
            rec.witness_c = out.c;
        }
        outcomes.push_back(std::move(out));
    };

    bool hit_timeout = false;
    for (const auto& seed_kappa : cfg.extra_kappa) {
        if (static_cast<int>(seed_kappa.size()) != m) continue;
        if (rec.max_stable >= 2 || (hit_timeout = expired())) break;
        std::vector<Rational> c =
            d > 0 ? sample_totals(rng, sd, cfg.sample_lo, cfg.sample_hi) : std::vector<Rational>{};
        consider(run_sample(net, seed_kappa, c));
    }
    for (int i = 0; i < cfg.sample_count && rec.max_stable < 2; ++i) {
        if ((hit_timeout = expired())) break;
        std::vector<Rational> kappa = sample_vector(rng, m, cfg.sample_lo, cfg.sample_hi);
        std::vector<Rational> c =
            d > 0 ? sample_totals(rng, sd, cfg.sample_lo, cfg.sample_hi) : std::vector<Rational>{};
        consider(run_sample(net, std::move(kappa), std::move(c)));
    }

    // Structured follow-up: bisect along segments between samples whose
    // positive-root counts differ — root counts change near such boundaries.
    int budget = 16;
    for (size_t a = 0; a + 1 < outcomes.size() && budget > 0 && rec.max_stable < 2; ++a) {
        for (size_t b = a + 1; b < outcomes.size() && budget > 0 && rec.max_stable < 2; ++b) {
            if (outcomes[a].nondegenerate == outcomes[b].nondegenerate) continue;
            if (outcomes[a].c != outcomes[b].c) continue;
            if ((hit_timeout = expired())) break;
            --budget;
            consider(run_sample(net, midpoint(outcomes[a].kappa, outcomes[b].kappa),
                                outcomes[a].c));
        }
        if (hit_timeout) break;
    }

    // Witness re-validation: never report a count the recorded parameters do
    // not reproduce.
    if (rec.witness_kappa) {
        SolveResult res = solve_positive_steady_states(net, *rec.witness_kappa,
                                                       rec.witness_c.value_or(std::vector<Rational>{}));
        rec.max_nondegenerate = 0;
        rec.max_stable = 0;
        if (res.status == SolveStatus::ok) {
            rec.witness_solutions = res.solutions;
            for (const auto& sol : res.solutions) {
                if (sol.nondegenerate) ++rec.max_nondegenerate;
                if (sol.stability == Stability::stable) ++rec.max_stable;
            }
        }
    }

    if (rec.max_stable >= 2)
        rec.stage = PipelineStage::multistable;
    else if (rec.max_nondegenerate >= 2)
        rec.stage = PipelineStage::multistationary;
    else if (hit_timeout)
        rec.stage = PipelineStage::timed_out;
    else
        rec.stage = PipelineStage::no_multistationarity_found;
    return rec;
}

PipelineSummary run_pipeline(const PipelineConfig& cfg,
                             const std::function<void(const NetworkVerdictRecord&)>& sink) {
    PipelineSummary summary;

    EnumerationOptions opts;
    opts.rank_filter = cfg.rank_filter;
    opts.canonical_only = cfg.canonical_only;

    // Deterministic reservoir subsample, or the whole family.
    std::vector<ReactionNetwork> family;
    std::mt19937_64 reservoir_rng(cfg.seed * 0x9e3779b97f4a7c15ull + 1);
    std::uint64_t seen = 0;
    enumerate_networks(cfg.species, cfg.reactions, opts, [&](const ReactionNetwork& net) {
        ++seen;
        if (!cfg.subsample) {
            family.push_back(net);
            return;
        }
        if (family.size() < *cfg.subsample) {
            family.push_back(net);
        } else {
            std::uniform_int_distribution<std::uint64_t> pick(0, seen - 1);
            std::uint64_t slot = pick(reservoir_rng);
            if (slot < *cfg.subsample) family[static_cast<size_t>(slot)] = net;
        }
    });
    summary.enumerated = seen;

    std::vector<NetworkVerdictRecord> records(family.size());
    std::atomic<size_t> next{0};
    int workers = worker_count(cfg);
    auto work = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= family.size()) break;
            records[i] = pipeline_analyze_network(family[i], cfg);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    for (const NetworkVerdictRecord& rec : records) {
        ++summary.analyzed;
        switch (rec.stage) {
            case PipelineStage::screened_injective: ++summary.screened_injective; break;
            case PipelineStage::no_multistationarity_found:
                ++summary.no_multistationarity_found;
                break;
            case PipelineStage::multistationary: ++summary.multistationary; break;
            case PipelineStage::multistable: ++summary.multistable; break;
            default: ++summary.timed_out; break;
        }
        if (sink) sink(rec);
    }
    return summary;
}

}  // namespace crn
