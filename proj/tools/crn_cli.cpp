// Command-line driver: single-network analysis, family enumeration, the
// screening pipeline, and the bundled catalog.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crn/network.hpp"
#include "crn/pipeline.hpp"
#include "crn/report.hpp"

using nlohmann::json;

namespace {

crn::Rational parse_rational(const std::string& text) {
    try {
        crn::Rational r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("not a rational number: '" + text + "'");
    }
}

std::vector<crn::Rational> parse_rational_list(const std::string& text) {
    std::vector<crn::Rational> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(parse_rational(item));
    return out;
}

crn::ReactionNetwork load_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open network file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return crn::parse_network(buf.str());
}

std::string one_line(const std::string& network_text) {
    std::string out;
    std::istringstream in(network_text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!out.empty()) out += "; ";
        out += line;
    }
    return out;
}

json record_json(const crn::NetworkVerdictRecord& rec) {
    json out;
    out["network"] = rec.canonical_text;
    out["stage"] = crn::stage_name(rec.stage);
    out["rank"] = rec.rank;
    out["extreme_rays"] = rec.ray_count;
    if (!rec.sign_verdict.empty()) {
        out["sign_verdict"] = rec.sign_verdict;
        out["b_terms"] = rec.b_terms;
        out["b_tilde_terms"] = rec.b_tilde_terms;
        out["theta_size"] = rec.theta_size;
    }
    out["samples_run"] = rec.samples_run;
    out["max_nondegenerate"] = rec.max_nondegenerate;
    out["max_stable"] = rec.max_stable;
    if (rec.witness_kappa) {
        json kappa = json::array();
        for (const auto& k : *rec.witness_kappa) kappa.push_back(crn::rational_string(k));
        out["witness_kappa"] = kappa;
        if (rec.witness_c && !rec.witness_c->empty()) {
            json c = json::array();
            for (const auto& v : *rec.witness_c) c.push_back(crn::rational_string(v));
            out["witness_c"] = c;
        }
        json states = json::array();
        for (const auto& sol : rec.witness_solutions) {
            json x = json::array();
            for (const auto& iv : sol.x) x.push_back(crn::decimal_string(iv.mid()));
            states.push_back({{"x", x},
                              {"nondegenerate", sol.nondegenerate},
                              {"stability", sol.stability == crn::Stability::stable ? "stable"
                                            : sol.stability == crn::Stability::unstable
                                                ? "unstable"
                                                : "undetermined"}});
        }
        out["witness_steady_states"] = states;
    }
    return out;
}

int run_analyze(const std::string& path, const std::optional<std::string>& kappa_text,
                const std::optional<std::string>& c_text, const std::string& output) {
    crn::ReactionNetwork net = load_network_file(path);
    std::optional<std::vector<crn::Rational>> kappa, c;
    if (kappa_text) kappa = parse_rational_list(*kappa_text);
    if (c_text) c = parse_rational_list(*c_text);
    json rep = crn::analyze_report(net, kappa, c);
    if (output.empty()) {
        std::cout << rep.dump(2) << "\n";
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << rep.dump(2) << "\n";
    }
    return 0;
}

int run_enumerate(int species, int reactions, std::optional<int> rank, bool canonical,
                  bool count_only, std::uint64_t limit) {
    crn::EnumerationOptions opts;
    opts.rank_filter = rank;
    opts.canonical_only = canonical;
    if (count_only) {
        std::cout << crn::count_networks(species, reactions, opts) << "\n";
        return 0;
    }
    std::uint64_t printed = 0;
    bool truncated = false;
    crn::enumerate_networks(species, reactions, opts, [&](const crn::ReactionNetwork& net) {
        if (limit != 0 && printed >= limit) {
            truncated = true;
            return;
        }
        ++printed;
        std::cout << one_line(crn::format_network(net)) << "\n";
    });
    if (truncated) std::cerr << "(output truncated at " << limit << " networks)\n";
    return 0;
}

crn::PipelineConfig config_from_json(const json& j) {
    crn::PipelineConfig cfg;
    cfg.species = j.value("species", cfg.species);
    cfg.reactions = j.value("reactions", cfg.reactions);
    if (j.contains("rank_filter") && !j["rank_filter"].is_null())
        cfg.rank_filter = j["rank_filter"].get<int>();
    cfg.canonical_only = j.value("canonical_only", cfg.canonical_only);
    if (j.contains("subsample") && !j["subsample"].is_null())
        cfg.subsample = j["subsample"].get<std::uint64_t>();
    cfg.sample_count = j.value("sample_count", cfg.sample_count);
    if (j.contains("sample_lo")) cfg.sample_lo = parse_rational(j["sample_lo"].get<std::string>());
    if (j.contains("sample_hi")) cfg.sample_hi = parse_rational(j["sample_hi"].get<std::string>());
    if (j.contains("extra_kappa"))
        for (const auto& row : j["extra_kappa"]) {
            std::vector<crn::Rational> kappa;
            for (const auto& entry : row) kappa.push_back(parse_rational(entry.get<std::string>()));
            cfg.extra_kappa.push_back(std::move(kappa));
        }
    cfg.seed = j.value("seed", cfg.seed);
    cfg.parallelism = j.value("parallelism", cfg.parallelism);
    cfg.timeout_seconds = j.value("timeout_seconds", cfg.timeout_seconds);
    if (cfg.sample_count < 1) throw std::runtime_error("sample_count must be at least 1");
    if (!(cfg.sample_lo > 0) || !(cfg.sample_hi >= cfg.sample_lo))
        throw std::runtime_error("sampling bounds must satisfy 0 < sample_lo <= sample_hi");
    return cfg;
}

int run_pipeline_cmd(const std::string& config_path, const std::string& output_dir) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
    }
    crn::PipelineConfig cfg = config_from_json(j);

    std::filesystem::create_directories(output_dir);
    std::ofstream records(std::filesystem::path(output_dir) / "records.jsonl");
    std::ofstream csv(std::filesystem::path(output_dir) / "summary.csv");
    if (!records || !csv) throw std::runtime_error("cannot write into " + output_dir);
    csv << "network,stage,rank,extreme_rays,sign_verdict,samples_run,max_nondegenerate,max_stable\n";

    crn::PipelineSummary summary =
        crn::run_pipeline(cfg, [&](const crn::NetworkVerdictRecord& rec) {
            records << record_json(rec).dump() << "\n";
            csv << '"' << one_line(rec.canonical_text) << "\"," << crn::stage_name(rec.stage)
                << ',' << rec.rank << ',' << rec.ray_count << ',' << rec.sign_verdict << ','
                << rec.samples_run << ',' << rec.max_nondegenerate << ',' << rec.max_stable
                << "\n";
        });

    json sj = {{"schema_version", crn::kReportSchemaVersion},
               {"enumerated", summary.enumerated},
               {"analyzed", summary.analyzed},
               {"screened_injective", summary.screened_injective},
               {"no_multistationarity_found", summary.no_multistationarity_found},
               {"multistationary", summary.multistationary},
               {"multistable", summary.multistable},
               {"timed_out", summary.timed_out}};
    std::ofstream sfile(std::filesystem::path(output_dir) / "summary.json");
    sfile << sj.dump(2) << "\n";
    std::cout << sj.dump(2) << "\n";
    return 0;
}

int run_catalog() {
    const char* ids[] = {"g1max", "g21", "g22", "g23", "g31",
                         "g32",   "g33", "g34", "g35", "g36",
                         "example2", "example3", "example5", "example6"};
    for (const char* id : ids) {
        std::ifstream in(std::string(CRN_DATA_DIR) + "/" + id + ".crn");
        if (!in) continue;
        std::ostringstream buf;
        buf << in.rdbuf();
        std::cout << "== " << id << " ==\n" << buf.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of small zero-one mass-action reaction networks"};
    app.require_subcommand(1);

    std::string path, kappa_text, c_text, output, config_path, output_dir = ".";
    int species = 3, reactions = 5;
    int rank = -1;
    bool canonical = false, count_only = false;
    std::uint64_t limit = 0;

    auto* analyze = app.add_subcommand("analyze", "Analyze one network file");
    analyze->add_option("file", path, "network file")->required();
    analyze->add_option("--kappa", kappa_text, "comma-separated positive rationals, one per reaction");
    analyze->add_option("--c", c_text, "comma-separated total constants, one per conservation law");
    analyze->add_option("--output", output, "write the JSON report here instead of stdout");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate a zero-one family");
    enumerate->add_option("--species", species, "species count")->required();
    enumerate->add_option("--reactions", reactions, "reactions per network")->required();
    enumerate->add_option("--rank", rank, "keep only networks of this rank");
    enumerate->add_flag("--canonical", canonical, "one representative per relabeling class");
    enumerate->add_flag("--count-only", count_only, "print the count instead of the networks");
    enumerate->add_option("--limit", limit, "stop printing after this many networks");

    auto* pipeline = app.add_subcommand("pipeline", "Run the screening pipeline");
    pipeline->add_option("--config", config_path, "JSON config file")->required();
    pipeline->add_option("--output-dir", output_dir, "directory for records.jsonl / summary.*");

    auto* catalog = app.add_subcommand("catalog", "Print the bundled fixture networks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(path,
                               kappa_text.empty() ? std::nullopt
                                                  : std::optional<std::string>(kappa_text),
                               c_text.empty() ? std::nullopt : std::optional<std::string>(c_text),
                               output);
        if (app.got_subcommand(enumerate))
            return run_enumerate(species, reactions,
                                 rank >= 0 ? std::optional<int>(rank) : std::nullopt, canonical,
                                 count_only, limit);
        if (app.got_subcommand(pipeline)) return run_pipeline_cmd(config_path, output_dir);
        if (app.got_subcommand(catalog)) return run_catalog();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
