// meshwave: deterministic three-layer network simulator and policy toolkit.
//
// Subcommands:
//   simulate  <scenario.json>             run replications, write KPIs + series
//   compare   <baseline.json> <proposed.json>   paired study with attribution
//   policy    <inputs.json>               subsidy / spectrum sweep to CSV
//   validate  <scenario.json>             check a scenario file
//
// Exit codes: 0 success, 2 invalid input (malformed file, invariant
// violation, bad arguments), 3 I/O failure (missing file, unwritable
// output), 4 scenario mismatch / domain error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "meshwave/engine.hpp"
#include "meshwave/errors.hpp"
#include "meshwave/policy.hpp"
#include "meshwave/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using namespace meshwave;

// Filesystem-level failures get their own exit code, distinct from
// malformed-but-readable input.
struct IoFailure : std::runtime_error {
    explicit IoFailure(const std::string& what) : std::runtime_error(what) {}
};

void require_readable(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open file: " + path);
}

// Seed priority: --seed flag, then the scenario file, then the
// MESHWAVE_SEED environment variable, then the built-in default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           const std::string& path, std::uint64_t file_seed) {
    if (flag) return *flag;
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    bool file_has_seed = false;
    try {
        auto j = nlohmann::json::parse(buf.str(), nullptr, true, true);
        file_has_seed = j.contains("seed");
    } catch (const nlohmann::json::exception&) {
        // unreachable for files that already loaded, kept for safety
    }
    if (file_has_seed) return file_seed;
    if (const char* env = std::getenv("MESHWAVE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ValidationError("MESHWAVE_SEED is not an unsigned integer");
        }
    }
    return file_seed;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot write output file: " + path.string());
    out << text;
}

std::string replication_summary_json(const ReplicationSet& set) {
    nlohmann::json j;
    j["scenario"] = set.scenario_name;
    j["mode"] = to_string(set.mode);
    j["replications"] = set.runs.size();
    nlohmann::json cis;
    for (const auto& [name, ci] : set.cis)
        cis[name] = {{"mean", ci.mean},
                     {"half_width", ci.half_width},
                     {"lo", ci.lo()},
                     {"hi", ci.hi()},
                     {"level", ci.level},
                     {"n", ci.n}};
    j["confidence_intervals"] = cis;
    return j.dump(2) + "\n";
}

void print_kpis(std::ostream& os, const KpiSnapshot& k) {
    os << "  latency p95      " << k.latency_p95_ms << " ms\n"
       << "  latency mean     " << k.latency_mean_ms << " ms\n"
       << "  throughput mean  " << k.throughput_mean_mbps << " Mbps\n"
       << "  loss rate        " << k.loss_rate << '\n'
       << "  jain mean        " << k.jain_mean << '\n'
       << "  beff peak        " << k.beff_peak << '\n'
       << "  rho_u (peak)     " << k.rho_u << '\n'
       << "  t_rec mean       " << k.t_rec_mean_s << " s (" << k.recovery_count
       << " events)\n"
       << "  cqs " << k.cqs << "  gpl " << k.gpl << "  gpi " << k.gpi << '\n';
}

int cmd_simulate(const std::string& scenario_path,
                 std::optional<std::uint64_t> seed_flag,
                 std::optional<int> reps_flag, const std::string& out_dir) {
    require_readable(scenario_path);
    ScenarioConfig config = load_scenario(scenario_path);
    config.seed = resolve_seed(seed_flag, scenario_path, config.seed);
    int reps = reps_flag.value_or(config.replications);
    if (reps < 2) throw ValidationError("replications must be >= 2");

    fs::create_directories(out_dir);
    ReplicationSet set = replicate(config, reps);
    const RunResult& first = set.runs.front();
    write_file(fs::path(out_dir) / "run.json",
               run_result_to_json_text(config, first));
    write_file(fs::path(out_dir) / "samples.csv", samples_to_csv(first));
    write_file(fs::path(out_dir) / "replications.json",
               replication_summary_json(set));

    std::cout << "scenario " << config.name << " (" << to_string(config.mode)
              << "), " << reps << " replications, seed " << config.seed << "\n";
    print_kpis(std::cout, first.kpis);
    std::cout << "outputs in " << out_dir << "\n";
    return 0;
}

void require_comparable(const ScenarioConfig& a, const ScenarioConfig& b) {
    bool same = a.topology.nodes.size() == b.topology.nodes.size() &&
                a.topology.links.size() == b.topology.links.size() &&
                a.duration_s == b.duration_s &&
                a.sample_interval_s == b.sample_interval_s &&
                a.traffic.user_rate.points == b.traffic.user_rate.points &&
                a.traffic.video_rate.points == b.traffic.video_rate.points &&
                a.traffic.total_capacity_mbps == b.traffic.total_capacity_mbps;
    if (!same)
        throw DomainError(
            "scenarios are not comparable: topology, duration and offered "
            "traffic must match");
}

int cmd_compare(const std::string& baseline_path, const std::string& proposed_path,
                std::optional<std::uint64_t> seed_flag,
                std::optional<int> reps_flag, const std::string& out_dir) {
    require_readable(baseline_path);
    require_readable(proposed_path);
    ScenarioConfig base = load_scenario(baseline_path);
    ScenarioConfig prop = load_scenario(proposed_path);
    if (base.mode != Mode::Baseline)
        throw DomainError("first scenario must use baseline mode");
    if (prop.mode != Mode::Proposed)
        throw DomainError("second scenario must use proposed mode");
    require_comparable(base, prop);

    base.seed = resolve_seed(seed_flag, baseline_path, base.seed);
    prop.seed = resolve_seed(seed_flag, proposed_path, prop.seed);
    int reps = reps_flag.value_or(std::min(base.replications, prop.replications));
    if (reps < 2) throw ValidationError("replications must be >= 2");

    fs::create_directories(out_dir);
    ReplicationSet base_set = replicate(base, reps);
    ReplicationSet prop_set = replicate(prop, reps);
    ComparisonReport report = compare(base_set, prop_set);
    report.attribution = attribute_components(prop, prop.seed);
    write_file(fs::path(out_dir) / "comparison.json",
               comparison_to_json_text(report));

    std::cout << "baseline " << base.name << " vs proposed " << prop.name << ", "
              << reps << " replications per side\n";
    for (const MetricComparison& m : report.metrics)
        std::cout << "  " << m.name << ": " << m.baseline_mean << " -> "
                  << m.proposed_mean << " (improvement "
                  << 100.0 * m.delta << "%)\n";
    std::cout << "outputs in " << out_dir << "\n";
    return 0;
}

int cmd_policy(const std::string& inputs_path, const std::string& out_file,
               std::vector<double> beta_grid, std::vector<double> alpha_grid) {
    require_readable(inputs_path);
    PolicyInputs inputs = load_policy_inputs(inputs_path);
    if (beta_grid.empty())
        beta_grid = {0.0, 0.05, 0.10, 0.15, 0.20, 0.25};
    if (alpha_grid.empty())
        for (const auto& [a, b] : inputs.beff_curve.anchors) alpha_grid.push_back(a);
    auto rows = policy_sweep(inputs, beta_grid, alpha_grid);
    std::string csv = sweep_to_csv(rows);
    if (out_file.empty())
        std::cout << csv;
    else
        write_file(out_file, csv);
    return 0;
}

int cmd_validate(const std::string& scenario_path) {
    std::ifstream in(scenario_path);
    if (!in) throw IoFailure("cannot open file: " + scenario_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str(), nullptr, true, true);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(scenario_path + ": " + e.what());
    }
    // parse without the embedded validation so every violation is listed
    ScenarioConfig config = scenario_from_json_text(buf.str(), scenario_path);
    std::cout << scenario_path << ": ok ("
              << config.topology.nodes.size() << " nodes, "
              << config.topology.links.size() << " links)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic mesh/broadcast/broker network study toolkit"};
    app.require_subcommand(1);

    std::string scenario_path, baseline_path, proposed_path, inputs_path;
    std::string out_dir = ".";
    std::string out_file;
    std::optional<std::uint64_t> seed_flag;
    std::optional<int> reps_flag;
    std::vector<double> beta_grid, alpha_grid;

    auto* sim = app.add_subcommand("simulate", "run one scenario");
    sim->add_option("scenario", scenario_path, "scenario JSON file")->required();
    sim->add_option("--seed", seed_flag, "override the run seed");
    sim->add_option("--replications", reps_flag, "number of replications");
    sim->add_option("--out", out_dir, "output directory");

    auto* cmp = app.add_subcommand("compare", "baseline vs proposed study");
    cmp->add_option("baseline", baseline_path, "baseline scenario")->required();
    cmp->add_option("proposed", proposed_path, "proposed scenario")->required();
    cmp->add_option("--seed", seed_flag, "override both run seeds");
    cmp->add_option("--replications", reps_flag, "number of replications per side");
    cmp->add_option("--out", out_dir, "output directory");

    auto* pol = app.add_subcommand("policy", "subsidy / spectrum sweep");
    pol->add_option("inputs", inputs_path, "policy inputs JSON file")->required();
    pol->add_option("--out", out_file, "CSV output file (default stdout)");
    pol->add_option("--beta-grid", beta_grid, "subsidy rates to sweep");
    pol->add_option("--alpha-grid", alpha_grid, "spectrum shares to sweep");

    auto* val = app.add_subcommand("validate", "check a scenario file");
    val->add_option("scenario", scenario_path, "scenario JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed())
            return cmd_simulate(scenario_path, seed_flag, reps_flag, out_dir);
        if (cmp->parsed())
            return cmd_compare(baseline_path, proposed_path, seed_flag, reps_flag,
                               out_dir);
        if (pol->parsed())
            return cmd_policy(inputs_path, out_file, beta_grid, alpha_grid);
        if (val->parsed()) return cmd_validate(scenario_path);
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 4;
}
