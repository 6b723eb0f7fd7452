#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "meshwave/broker.hpp"
#include "meshwave/metrics.hpp"
#include "meshwave/scenario.hpp"

namespace meshwave {

struct StepSample {
    double t = 0.0;
    double lambda_mbps = 0.0;      // offered Lambda(t)
    double rho = 0.0;              // Lambda / C_tot
    double latency_ms = 0.0;
    double queueing_ms = 0.0;
    double throughput_mbps = 0.0;  // mean per active user
    double loss = 0.0;             // lost / sent within the step
    double beff = 0.0;
    double alpha_s = 0.0;
    double unicast_mbps = 0.0;     // carried unicast
    double d2m_mbps = 0.0;         // carried by broadcast
    double shed_mbps = 0.0;        // offered but not admitted
    double jain = 0.0;
    int active_users = 0;
};

struct KpiSnapshot {
    double latency_p95_ms = 0.0;
    double latency_mean_ms = 0.0;
    double queueing_mean_ms = 0.0;
    double throughput_mean_mbps = 0.0;
    double loss_rate = 0.0;          // run-level lost / sent
    double jain_mean = 0.0;
    double cqs = 0.0;
    double gpl = 0.0;
    double gpi = 0.0;
    double rho_u = 0.0;              // peak-window mean unicast congestion ratio
    double rho_peak = 0.0;           // peak-window mean offered rho
    double beff_peak = 0.0;          // peak-window mean offload efficiency
    double beff_mean = 0.0;
    double delta_r = 0.0;
    double t_rec_mean_s = 0.0;       // 0 when no recovery events
    double t_rec_single_mean_s = 0.0;
    double t_rec_multi_mean_s = 0.0;
    int t_rec_single_count = 0;
    int t_rec_multi_count = 0;
    int recovery_count = 0;
};

struct RunResult {
    std::vector<StepSample> samples;
    std::vector<RecoveryEvent> recovery_events;
    KpiSnapshot kpis;
    std::uint64_t seed = 0;
    Mode mode = Mode::Baseline;
};

// One deterministic simulation run; identical (config, seed) pairs
// produce identical results.
RunResult run(const ScenarioConfig& config, std::uint64_t seed);

// Recomputes the KPI snapshot from the recorded samples and events;
// used by tests to check kpis are a pure function of the series.
KpiSnapshot recompute_kpis(const ScenarioConfig& config, const RunResult& result);

struct ReplicationSet {
    std::vector<RunResult> runs;
    std::map<std::string, ConfidenceInterval> cis;  // keyed by KPI name
    std::string scenario_name;
    Mode mode = Mode::Baseline;
};

// n runs with substream seeds derived from config.seed; throws
// DomainError for n < 2.
ReplicationSet replicate(const ScenarioConfig& config, int n);

struct MetricComparison {
    std::string name;
    double baseline_mean = 0.0;
    double proposed_mean = 0.0;
    double baseline_half_width = 0.0;
    double proposed_half_width = 0.0;
    double delta = 0.0;         // signed relative change, improvement positive
    bool higher_is_better = false;
};

struct AttributionRow {
    std::string metric;
    double mesh_share = 0.0;
    double d2m_share = 0.0;
    double broker_share = 0.0;
};

struct ComparisonReport {
    std::vector<MetricComparison> metrics;
    std::vector<AttributionRow> attribution;
};

// Aggregates both replication sets and computes per-KPI deltas.
// Throws DomainError when either side is empty.
ComparisonReport compare(const ReplicationSet& baseline, const ReplicationSet& proposed);

// Counterfactual attribution: reruns the proposed scenario with each
// layer disabled in turn (same seed) and normalizes the degradations.
std::vector<AttributionRow> attribute_components(const ScenarioConfig& config,
                                                 std::uint64_t seed);

// Serialization used by the CLI and by the determinism tests.
std::string run_result_to_json_text(const ScenarioConfig& config, const RunResult& r);
std::string samples_to_csv(const RunResult& r);
std::string comparison_to_json_text(const ComparisonReport& report);

}  // namespace meshwave
