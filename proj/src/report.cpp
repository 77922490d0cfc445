#include "crn/report.hpp"

#include <cstdio>
#include <stdexcept>

#include "crn/fluxcone.hpp"
#include "crn/lowdim.hpp"
#include "crn/onedim.hpp"
#include "crn/sign_analysis.hpp"
#include "crn/solver.hpp"
#include "crn/symbolics.hpp"

namespace crn {

namespace {

using nlohmann::json;

json interval_json(const Interval& iv) {
    return {{"lo", rational_string(iv.lo)},
            {"hi", rational_string(iv.hi)},
            {"mid", decimal_string(iv.mid())}};
}

json rationals_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const Rational& r : v) arr.push_back(rational_string(r));
    return arr;
}

const char* stability_name(Stability st) {
    switch (st) {
        case Stability::stable: return "stable";
        case Stability::unstable: return "unstable";
        default: return "undetermined";
    }
}

json solution_json(const SteadyStateSolution& sol) {
    json x = json::array(), xd = json::array();
    for (const Interval& iv : sol.x) {
        x.push_back(interval_json(iv));
        xd.push_back(decimal_string(iv.mid()));
    }
    return {{"x", x},
            {"x_decimal", xd},
            {"nondegenerate", sol.nondegenerate},
            {"stability", stability_name(sol.stability)},
            {"det_jac_h_sign", sol.det_jac_h_sign},
            {"det_jac_f_sign", sol.det_jac_f_sign},
            {"certified", sol.certified}};
}

json sign_report_json(const SignReport& rep) {
    json out;
    switch (rep.verdict) {
        case SignVerdict::positive_certified: out["verdict"] = "positive_certified"; break;
        case SignVerdict::zero_polynomial: out["verdict"] = "zero_polynomial"; break;
        default: out["verdict"] = "inconclusive"; break;
    }
    out["b_terms"] = rep.b_terms;
    out["b_tilde_terms"] = rep.b_tilde_terms;
    out["theta_size"] = rep.theta_size;
    out["ray_count"] = rep.ray_count;
    if (rep.witness_pair) {
        out["witness_pair"] = {rep.witness_pair->first, rep.witness_pair->second};
        json pairs = json::array();
        for (const auto& [k, l] : rep.witness_lambda_pairs) pairs.push_back({k, l});
        out["witness_lambda_pairs"] = pairs;
    }
    return out;
}

const char* one_dim_verdict_name(OneDimVerdict v) {
    switch (v) {
        case OneDimVerdict::no_steady_states: return "no_steady_states";
        case OneDimVerdict::no_positive_class: return "no_positive_class";
        default: return "one_stable_steady_state";
    }
}

}  // namespace

std::string rational_string(const Rational& r) { return r.get_str(); }

std::string decimal_string(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.get_d());
    return buf;
}

json analyze_report(const ReactionNetwork& net, const std::optional<std::vector<Rational>>& kappa,
                    const std::optional<std::vector<Rational>>& c) {
    StoichiometricData sd = stoichiometric_data(net);
    int s = sd.species_count(), m = sd.reaction_count(), r = sd.rank_N, d = sd.deficiency_dim();
    if (s > 4) throw std::invalid_argument("unsupported network shape: more than four species");
    if (kappa && static_cast<int>(kappa->size()) != m)
        throw std::invalid_argument("kappa length does not match the reaction count");
    if (c && static_cast<int>(c->size()) != d)
        throw std::invalid_argument("c length does not match the conservation-law count");

    json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["network"] = format_network(net);
    rep["canonical"] = format_network(canonical_form(net));
    rep["species"] = s;
    rep["reactions"] = m;
    rep["rank"] = r;
    rep["conservation_laws"] = d;
    {
        json w = json::array();
        for (const auto& row : sd.W) w.push_back(rationals_json(row));
        rep["conservation_matrix"] = w;
    }
    if (kappa) rep["kappa"] = rationals_json(*kappa);
    if (c) rep["c"] = rationals_json(*c);

    VarUniverse u{m, s, 0, d};
    SteadyStateSystem ss = build_f(sd, u);
    rep["injectivity"] =
        injectivity_screen(ss) == InjectivityVerdict::injective ? "injective" : "undetermined";

    ExtremeRaySet rays = extreme_rays(sd);
    rep["flux_cone"] = {{"extreme_rays", rays.count()},
                        {"strictly_positive_flux", strictly_positive_flux_exists(rays, m)}};

    if (r == 1) {
        OneDimStructure st = analyze_one_dim(sd);
        json one;
        one["pivot_species"] = st.pivot;
        one["region"] = region_inequalities(st);
        one["all_rows_change_sign"] = st.all_rows_change_sign;
        if (c) {
            one["class_verdict"] = one_dim_verdict_name(classify_total_constant(st, *c));
            if (auto w = witness_point(st, *c)) one["class_witness"] = rationals_json(*w);
        }
        if (kappa && c) {
            OneDimFullResult full = one_dim_full_verdict(sd, *kappa, *c);
            one["verdict"] = one_dim_verdict_name(full.verdict);
            if (full.steady_state) {
                json x = json::array();
                for (const Interval& iv : *full.steady_state) x.push_back(interval_json(iv));
                one["steady_state"] = x;
            }
            if (full.stable) one["stable"] = *full.stable;
        }
        rep["one_dimensional"] = one;
    }

    if (r == 2 && s == 2) {
        QuadraticReduction red = two_species_reduce(net);
        json two;
        two["template_slots"] = red.slot;
        if (kappa) {
            switch (two_species_verdict(red, *kappa)) {
                case TwoSpeciesVerdict::no_positive: two["verdict"] = "no_positive"; break;
                case TwoSpeciesVerdict::one_nondegenerate:
                    two["verdict"] = "one_nondegenerate";
                    break;
                default: two["verdict"] = "degenerate_continuum"; break;
            }
        }
        rep["two_species"] = two;
    }

    if (r == 2 && s == 3) {
        json three;
        DegeneracyResult deg = degeneracy_verdict(net);
        switch (deg.verdict) {
            case DegeneracyVerdict::only_degenerate: three["degeneracy"] = "only_degenerate"; break;
            case DegeneracyVerdict::no_positive_flux: three["degeneracy"] = "no_positive_flux"; break;
            default: three["degeneracy"] = "nondegenerate_possible"; break;
        }
        if (deg.sign) three["sign"] = sign_report_json(*deg.sign);
        MaximumClass cls = classify_conservation_pair(sd);
        const char* cname = cls.cls == MaxNetClass::G1   ? "G1"
                            : cls.cls == MaxNetClass::G2 ? "G2"
                                                         : "G3";
        three["conservation_pair"] = {{"a", rational_string(cls.a)},
                                      {"b", rational_string(cls.b)},
                                      {"class", cname}};
        three["is_maximum"] = is_maximum_network(net);
        if (auto id = catalog_match(net)) three["catalog_id"] = *id;
        rep["three_species_rank_two"] = three;
    }

    if (kappa && (d == 0 || c)) {
        std::vector<Rational> totals = c ? *c : std::vector<Rational>{};
        SolveResult res = solve_positive_steady_states(net, *kappa, totals);
        json sol;
        switch (res.status) {
            case SolveStatus::degenerate_continuum: sol["status"] = "degenerate_continuum"; break;
            case SolveStatus::elimination_failed: sol["status"] = "elimination_failed"; break;
            default: sol["status"] = "ok"; break;
        }
        json list = json::array();
        for (const auto& solution : res.solutions) {
            json sj = solution_json(solution);
            if (solution.nondegenerate) {
                HurwitzData hd = hurwitz_data(net, *kappa, solution.x);
                json hur = json::array();
                for (const Interval& H : hd.hurwitz_determinants) hur.push_back(interval_json(H));
                sj["hurwitz_determinants"] = hur;
            }
            list.push_back(sj);
        }
        sol["solutions"] = list;
        rep["steady_states"] = sol;
    } else if (kappa && d > 0) {
        rep["steady_states"] = {{"status", "total_constants_required"}};
    }

    return rep;
}

}  // namespace crn
