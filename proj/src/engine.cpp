#include "meshwave/engine.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "meshwave/d2m.hpp"
#include "meshwave/errors.hpp"
#include "meshwave/mesh.hpp"
#include "meshwave/metrics.hpp"
#include "meshwave/traffic.hpp"

namespace meshwave {

namespace {

struct Session {
    double end_time = 0.0;
    double demand_mbps = 0.0;
    bool viewer = false;
};

struct Outage {
    double end_time = 0.0;
    double loss_fraction = 0.0;  // effective, post-buffering
};

double lognormal_params_mu(double mean, double cv, double& sigma_out) {
    // parameterized so sample mean and CV match the requested values
    double sigma2 = std::log(1.0 + cv * cv);
    sigma_out = std::sqrt(sigma2);
    return std::log(mean) - 0.5 * sigma2;
}

Session make_session(double now, const TrafficParams& tp, RngStream& rng) {
    Session s;
    // Arrivals land at a uniform phase inside the step; without the phase
    // offset a session is counted for ceil(duration) whole steps, which
    // overstates offered load by ~half a step per session.
    s.end_time = now + sample_session_duration(tp.mean_session_duration_s, rng) -
                 rng.uniform();
    if (tp.session_bandwidth_cv > 0.0) {
        double sigma;
        double mu = lognormal_params_mu(tp.per_session_bandwidth_mbps,
                                        tp.session_bandwidth_cv, sigma);
        s.demand_mbps = rng.lognormal(mu, sigma);
    } else {
        s.demand_mbps = tp.per_session_bandwidth_mbps;
    }
    s.viewer = rng.uniform() < tp.viewer_fraction;
    return s;
}

}  // namespace

RunResult run(const ScenarioConfig& config, std::uint64_t seed) {
    auto violations = validate(config);
    if (!violations.empty()) throw ValidationError(violations.front());

    const TrafficParams& tp = config.traffic;
    const EngineParams& ep = config.engine;
    const bool proposed = config.mode == Mode::Proposed;
    const double dt = config.sample_interval_s;
    const std::size_t steps =
        static_cast<std::size_t>(std::llround(config.duration_s / dt));

    RngStream arrivals_rng(substream_seed(seed, "arrivals"));
    RngStream sessions_rng(substream_seed(seed, "sessions"));
    RngStream failures_rng(substream_seed(seed, "failures"));
    RngStream recovery_rng(substream_seed(seed, "recovery"));
    RngStream transients_rng(substream_seed(seed, "transients"));

    // Routing: proposed mode uses SDN shortest paths; baseline attaches
    // through the configured gateways (conventional star topology).
    std::vector<int> gateways = (proposed && !ep.force_gateway_routing)
                                    ? std::vector<int>{}
                                    : ep.gateway_ids;
    RoutingState base_routes =
        compute_routes(config.topology, ep.v_sdn_hops_per_ms, gateways);
    RoutingState routes = base_routes;

    // Spectrum split is static within a run.
    auto [s_d2m, s_unic] = split_spectrum(config.spectrum);
    SinrResult sig = sinr(config.spectrum, s_unic);
    double c_d2m = 0.0;
    if (proposed && config.spectrum.alpha_s > 0.0 && sig.decodable)
        c_d2m = d2m_capacity(s_d2m, config.spectrum.eta_d2m);
    const double c_unic =
        (1.0 - config.spectrum.alpha_s) * tp.total_capacity_mbps;

    // Hardware failure schedule, drawn up front.
    std::vector<FailureEvent> failures =
        inject_failures(config.failure_plan, config.topology, failures_rng);
    std::size_t next_failure = 0;
    std::set<int> failed_nodes;
    std::vector<std::pair<double, std::vector<int>>> restores;  // (time, nodes)

    std::vector<Session> sessions;
    // steady-state session count at t = 0 (arrivals * mean holding time)
    int initial =
        sessions_rng.poisson(tp.user_rate.at(0.0) * tp.mean_session_duration_s);
    sessions.reserve(static_cast<std::size_t>(initial) + 64);
    for (int i = 0; i < initial; ++i)
        sessions.push_back(make_session(0.0, tp, sessions_rng));

    std::vector<Outage> outages;
    std::vector<double> theta_scratch;

    RunResult result;
    result.seed = seed;
    result.mode = config.mode;
    result.samples.reserve(steps);

    const double peak_rate_threshold = 0.95 * tp.user_rate.max_value();

    double total_lost = 0.0;
    double total_sent = 0.0;

    for (std::size_t step = 0; step < steps; ++step) {
        const double t = static_cast<double>(step) * dt;

        // session churn
        for (std::size_t i = 0; i < sessions.size();) {
            if (sessions[i].end_time <= t) {
                sessions[i] = sessions.back();
                sessions.pop_back();
            } else {
                ++i;
            }
        }
        int born = sample_arrivals(tp.user_rate.at(t), dt, arrivals_rng);
        for (int i = 0; i < born; ++i)
            sessions.push_back(make_session(t, tp, sessions_rng));

        // transient link flaps
        if (config.failure_plan.transient_rate_per_s > 0.0) {
            int flaps =
                transients_rng.poisson(config.failure_plan.transient_rate_per_s * dt);
            for (int i = 0; i < flaps; ++i) {
                double d = transients_rng.uniform(
                    0.0, config.failure_plan.transient_max_duration_s);
                double eff = residual_loss(
                    config.failure_plan.transient_affected_fraction, d,
                    config.broker.buffer_seconds);
                if (d > 0.0 && eff > 0.0)
                    outages.push_back({t + d, eff});
            }
        }

        // hardware failures due now
        while (next_failure < failures.size() &&
               failures[next_failure].time_s <= t) {
            const FailureEvent& ev = failures[next_failure++];
            for (int id : ev.node_ids) failed_nodes.insert(id);
            const TriangularDist& sd =
                config.recovery.sdwmn(config.broker.failover_mode, ev.kind);
            RerouteResult rr = reroute_on_failure(base_routes, config.topology,
                                                  failed_nodes, sd, recovery_rng);
            routes = rr.state;
            double t_kafka = failover_time(config.broker, ev.kind, config.recovery,
                                           recovery_rng);
            RecoveryEvent rec;
            rec.time_s = ev.time_s;
            rec.t_sdwmn_s = rr.t_sdwmn_s;
            rec.t_kafka_s = t_kafka;
            rec.t_rec_s = compose_recovery(rr.t_sdwmn_s, t_kafka);
            rec.kind = ev.kind;
            result.recovery_events.push_back(rec);

            double frac = config.failure_plan.affected_fraction *
                          (ev.kind == FailureKind::MultiNode ? 2.0 : 1.0);
            double eff = residual_loss(std::min(1.0, frac), rec.t_rec_s,
                                       config.broker.buffer_seconds);
            if (eff > 0.0) outages.push_back({t + rec.t_rec_s, eff});
            restores.emplace_back(t + rec.t_rec_s, ev.node_ids);
        }

        // service restorations
        for (std::size_t i = 0; i < restores.size();) {
            if (restores[i].first <= t) {
                for (int id : restores[i].second) failed_nodes.erase(id);
                restores[i] = restores.back();
                restores.pop_back();
                routes = failed_nodes.empty()
                             ? base_routes
                             : reroute_on_failure(base_routes, config.topology,
                                                  failed_nodes,
                                                  TriangularDist{0, 0, 0},
                                                  recovery_rng)
                                   .state;
            } else {
                ++i;
            }
        }

        // offered load
        double user_mbps = 0.0;
        std::size_t viewers = 0;
        for (const Session& s : sessions) {
            user_mbps += s.demand_mbps;
            if (s.viewer) ++viewers;
        }
        const double video_mbps = tp.video_rate.at(t);
        const double lambda = aggregate_load(user_mbps, video_mbps);
        const double rho = utilization(lambda, tp.total_capacity_mbps);

        // broadcast offload
        double t_d2m = 0.0;
        if (c_d2m > 0.0 && video_mbps > 0.0)
            t_d2m = std::min(c_d2m, video_mbps);
        const double beff =
            lambda > 0.0 ? offload_efficiency(c_d2m, video_mbps, lambda) : 0.0;

        // unicast bottleneck
        const double unicast_offered = user_mbps + (video_mbps - t_d2m);
        const double u_raw = c_unic > 0.0 ? unicast_offered / c_unic : 0.0;
        double efficiency =
            1.0 - ep.contention_slope * std::max(0.0, u_raw - ep.contention_threshold);
        efficiency = std::clamp(efficiency, 0.05, 1.0);
        const double carried_unicast =
            std::min(unicast_offered, efficiency * c_unic);
        const double shed = unicast_offered - carried_unicast;

        // latency: propagation + control-plane routing + queueing
        double u_eff = std::min(u_raw, ep.utilization_cap);
        double queueing_ms = std::min(
            1000.0 / (ep.queue_service_rate_per_s * (1.0 - u_eff)),
            ep.latency_cap_ms);
        const double latency_ms =
            ep.base_propagation_ms +
            mesh_latency(routes.d_mesh, ep.v_sdn_hops_per_ms) + queueing_ms;

        // per-user delivery and fairness
        double throughput = 0.0;
        double jain = 0.0;
        const std::size_t active = sessions.size();
        if (active > 0) {
            const double resid_video =
                viewers > 0 ? (video_mbps - t_d2m) / static_cast<double>(viewers)
                            : 0.0;
            const double bcast_per_viewer =
                viewers > 0 ? t_d2m / static_cast<double>(viewers) : 0.0;
            theta_scratch.clear();
            theta_scratch.reserve(active);
            const bool congested = u_raw > ep.contention_threshold &&
                                   carried_unicast < unicast_offered;
            if (!congested) {
                for (const Session& s : sessions) {
                    double e = s.demand_mbps + (s.viewer ? resid_video : 0.0);
                    theta_scratch.push_back(e + (s.viewer ? bcast_per_viewer : 0.0));
                }
            } else {
                // heavy sessions monopolize the contended medium; the
                // allocation skew deepens with congestion depth
                double p = 1.0 + ep.monopolization_slope *
                                     (u_raw - ep.contention_threshold);
                double wsum = 0.0;
                for (const Session& s : sessions) {
                    double e = s.demand_mbps + (s.viewer ? resid_video : 0.0);
                    wsum += std::pow(e, p);
                }
                for (const Session& s : sessions) {
                    double e = s.demand_mbps + (s.viewer ? resid_video : 0.0);
                    double share = carried_unicast * std::pow(e, p) / wsum;
                    theta_scratch.push_back(std::min(e, share) +
                                            (s.viewer ? bcast_per_viewer : 0.0));
                }
            }
            double sum = 0.0;
            for (double x : theta_scratch) sum += x;
            throughput = sum / static_cast<double>(active);
            jain = jain_index(theta_scratch);
        }

        // outage-driven packet loss
        double loss_fraction = 0.0;
        for (std::size_t i = 0; i < outages.size();) {
            if (outages[i].end_time <= t) {
                outages[i] = outages.back();
                outages.pop_back();
            } else {
                loss_fraction += outages[i].loss_fraction;
                ++i;
            }
        }
        loss_fraction = std::min(1.0, loss_fraction);
        const double sent = (carried_unicast + t_d2m) * dt;
        const double lost = loss_fraction * sent;
        total_sent += sent;
        total_lost += lost;

        StepSample sample;
        sample.t = t;
        sample.lambda_mbps = lambda;
        sample.rho = rho;
        sample.latency_ms = latency_ms;
        sample.queueing_ms = queueing_ms;
        sample.throughput_mbps = throughput;
        sample.loss = sent > 0.0 ? lost / sent : 0.0;
        sample.beff = beff;
        sample.alpha_s = config.spectrum.alpha_s;
        sample.unicast_mbps = carried_unicast;
        sample.d2m_mbps = t_d2m;
        sample.shed_mbps = shed;
        sample.jain = jain;
        sample.active_users = static_cast<int>(active);
        result.samples.push_back(sample);
        (void)peak_rate_threshold;
    }

    result.kpis = recompute_kpis(config, result);
    return result;
}

KpiSnapshot recompute_kpis(const ScenarioConfig& config, const RunResult& result) {
    KpiSnapshot k;
    k.delta_r = config.policy.delta_r;
    if (result.samples.empty()) return k;

    const double dt = config.sample_interval_s;
    const double peak_threshold = 0.95 * config.traffic.user_rate.max_value();

    std::vector<double> latencies;
    latencies.reserve(result.samples.size());
    double lat_sum = 0.0, queue_sum = 0.0, thr_sum = 0.0;
    double jain_sum = 0.0;
    std::size_t jain_count = 0;
    double lost = 0.0, sent = 0.0;
    double beff_sum = 0.0;
    double peak_beff_sum = 0.0, peak_rho_sum = 0.0, peak_rho_u_sum = 0.0;
    std::size_t peak_count = 0;

    for (const StepSample& s : result.samples) {
        latencies.push_back(s.latency_ms);
        lat_sum += s.latency_ms;
        queue_sum += s.queueing_ms;
        thr_sum += s.throughput_mbps;
        if (s.active_users > 0) {
            jain_sum += s.jain;
            ++jain_count;
        }
        double step_sent = (s.unicast_mbps + s.d2m_mbps) * dt;
        sent += step_sent;
        lost += s.loss * step_sent;
        beff_sum += s.beff;
        bool peak = config.traffic.user_rate.at(s.t) >= peak_threshold;
        if (peak) {
            ++peak_count;
            peak_beff_sum += s.beff;
            peak_rho_sum += s.rho;
            peak_rho_u_sum += (s.unicast_mbps + s.shed_mbps) /
                              config.traffic.total_capacity_mbps;
        }
    }

    const double n = static_cast<double>(result.samples.size());
    k.latency_p95_ms = percentile(latencies, 0.95);
    k.latency_mean_ms = lat_sum / n;
    k.queueing_mean_ms = queue_sum / n;
    k.throughput_mean_mbps = thr_sum / n;
    k.jain_mean = jain_count > 0 ? jain_sum / static_cast<double>(jain_count) : 0.0;
    k.loss_rate = sent > 0.0 ? lost / sent : 0.0;
    k.beff_mean = beff_sum / n;
    if (peak_count > 0) {
        k.beff_peak = peak_beff_sum / static_cast<double>(peak_count);
        k.rho_peak = peak_rho_sum / static_cast<double>(peak_count);
        k.rho_u = peak_rho_u_sum / static_cast<double>(peak_count);
    }

    double t_rec_sum = 0.0, single_sum = 0.0, multi_sum = 0.0;
    int single_n = 0, multi_n = 0;
    for (const RecoveryEvent& e : result.recovery_events) {
        t_rec_sum += e.t_rec_s;
        if (e.kind == FailureKind::SingleNode) {
            single_sum += e.t_rec_s;
            ++single_n;
        } else {
            multi_sum += e.t_rec_s;
            ++multi_n;
        }
    }
    k.recovery_count = static_cast<int>(result.recovery_events.size());
    if (k.recovery_count > 0)
        k.t_rec_mean_s = t_rec_sum / static_cast<double>(k.recovery_count);
    k.t_rec_single_mean_s =
        single_n > 0 ? single_sum / static_cast<double>(single_n) : 0.0;
    k.t_rec_multi_mean_s =
        multi_n > 0 ? multi_sum / static_cast<double>(multi_n) : 0.0;
    k.t_rec_single_count = single_n;
    k.t_rec_multi_count = multi_n;

    k.cqs = cqs(k.latency_p95_ms, config.engine.latency_max_ms,
                k.throughput_mean_mbps, config.engine.throughput_max_mbps,
                k.jain_mean, config.weights.cqs);
    k.gpl = gpl(k.rho_u, config.policy.delta_r,
                k.t_rec_mean_s / config.engine.t_rec_norm_s, config.weights.gpl);
    k.gpi = gpi(std::clamp(k.cqs, 0.0, 1.0), 1.0 - config.policy.delta_r,
                config.engine.cost_efficiency, config.weights.gpi);
    return k;
}

ReplicationSet replicate(const ScenarioConfig& config, int n) {
    if (n < 2) throw DomainError("replications must be >= 2");
    ReplicationSet set;
    set.scenario_name = config.name;
    set.mode = config.mode;
    set.runs.resize(static_cast<std::size_t>(n));

    unsigned hw = std::thread::hardware_concurrency();
    std::size_t jobs = std::max(1u, hw);
    std::vector<std::future<void>> futures;
    std::size_t next = 0;
    auto worker = [&config, &set](std::size_t i) {
        set.runs[i] = run(config, config.seed ^ static_cast<std::uint64_t>(i));
    };
    // replications are independent; results land at fixed indices so the
    // outcome does not depend on scheduling
    while (next < set.runs.size()) {
        futures.clear();
        std::size_t batch = std::min(jobs, set.runs.size() - next);
        for (std::size_t j = 0; j < batch; ++j)
            futures.push_back(std::async(std::launch::async, worker, next + j));
        for (auto& f : futures) f.get();
        next += batch;
    }

    auto collect = [&set](const char* name, auto getter, bool only_with_events) {
        std::vector<double> values;
        for (const RunResult& r : set.runs) {
            if (only_with_events && r.recovery_events.empty()) continue;
            values.push_back(getter(r.kpis));
        }
        if (values.size() >= 2)
            set.cis[name] = confidence_interval(values);
    };
    collect("latency_p95_ms", [](const KpiSnapshot& k) { return k.latency_p95_ms; }, false);
    collect("latency_mean_ms", [](const KpiSnapshot& k) { return k.latency_mean_ms; }, false);
    collect("throughput_mean_mbps",
            [](const KpiSnapshot& k) { return k.throughput_mean_mbps; }, false);
    collect("loss_rate", [](const KpiSnapshot& k) { return k.loss_rate; }, false);
    collect("jain_mean", [](const KpiSnapshot& k) { return k.jain_mean; }, false);
    collect("cqs", [](const KpiSnapshot& k) { return k.cqs; }, false);
    collect("gpl", [](const KpiSnapshot& k) { return k.gpl; }, false);
    collect("gpi", [](const KpiSnapshot& k) { return k.gpi; }, false);
    collect("rho_u", [](const KpiSnapshot& k) { return k.rho_u; }, false);
    collect("beff_peak", [](const KpiSnapshot& k) { return k.beff_peak; }, false);
    collect("t_rec_mean_s", [](const KpiSnapshot& k) { return k.t_rec_mean_s; }, true);
    return set;
}

namespace {

double ci_mean(const ReplicationSet& s, const std::string& key) {
    auto it = s.cis.find(key);
    return it == s.cis.end() ? 0.0 : it->second.mean;
}

double ci_hw(const ReplicationSet& s, const std::string& key) {
    auto it = s.cis.find(key);
    return it == s.cis.end() ? 0.0 : it->second.half_width;
}

}  // namespace

ComparisonReport compare(const ReplicationSet& baseline,
                         const ReplicationSet& proposed) {
    if (baseline.runs.empty() || proposed.runs.empty())
        throw DomainError("comparison needs runs on both sides");
    if (baseline.mode != Mode::Baseline || proposed.mode != Mode::Proposed)
        throw DomainError("comparison sides must be a baseline and a proposed set");

    ComparisonReport report;
    struct Spec {
        const char* key;
        bool higher_is_better;
    };
    static constexpr Spec specs[] = {
        {"latency_p95_ms", false}, {"throughput_mean_mbps", true},
        {"loss_rate", false},      {"jain_mean", true},
        {"t_rec_mean_s", false},   {"cqs", true},
        {"gpl", false},            {"gpi", true},
        {"rho_u", false},          {"beff_peak", true},
    };
    for (const Spec& s : specs) {
        MetricComparison m;
        m.name = s.key;
        m.higher_is_better = s.higher_is_better;
        m.baseline_mean = ci_mean(baseline, s.key);
        m.proposed_mean = ci_mean(proposed, s.key);
        m.baseline_half_width = ci_hw(baseline, s.key);
        m.proposed_half_width = ci_hw(proposed, s.key);
        if (m.baseline_mean != 0.0) {
            double reduction = relative_change(m.baseline_mean, m.proposed_mean);
            m.delta = s.higher_is_better ? -reduction : reduction;
        }
        report.metrics.push_back(m);
    }
    return report;
}

std::vector<AttributionRow> attribute_components(const ScenarioConfig& config,
                                                 std::uint64_t seed) {
    if (config.mode != Mode::Proposed)
        throw DomainError("component attribution requires a proposed-mode scenario");

    RunResult full = run(config, seed);

    // mesh layer off: gateway-star routing, D2M and broker kept intact
    RunResult mesh_run = [&] {
        ScenarioConfig c = config;
        c.engine.force_gateway_routing = true;
        return run(c, seed);
    }();

    RunResult d2m_run = [&] {
        ScenarioConfig c = config;
        c.spectrum.alpha_s = 0.0;
        return run(c, seed);
    }();

    RunResult broker_run = [&] {
        ScenarioConfig c = config;
        c.broker.buffer_seconds = 0.0;
        c.broker.failover_mode = FailoverMode::Centralized;
        return run(c, seed);
    }();

    auto degradation = [](double off, double on, bool higher_is_better) {
        return higher_is_better ? std::max(0.0, on - off) : std::max(0.0, off - on);
    };

    std::vector<AttributionRow> rows;
    struct MetricDef {
        const char* name;
        double full_v;
        double mesh_v;
        double d2m_v;
        double broker_v;
        bool higher;
    };
    const KpiSnapshot& f = full.kpis;
    MetricDef defs[] = {
        {"latency_p95_ms", f.latency_p95_ms, mesh_run.kpis.latency_p95_ms,
         d2m_run.kpis.latency_p95_ms, broker_run.kpis.latency_p95_ms, false},
        {"throughput_mean_mbps", f.throughput_mean_mbps,
         mesh_run.kpis.throughput_mean_mbps, d2m_run.kpis.throughput_mean_mbps,
         broker_run.kpis.throughput_mean_mbps, true},
        {"loss_rate", f.loss_rate, mesh_run.kpis.loss_rate, d2m_run.kpis.loss_rate,
         broker_run.kpis.loss_rate, false},
        {"t_rec_mean_s", f.t_rec_mean_s, mesh_run.kpis.t_rec_mean_s,
         d2m_run.kpis.t_rec_mean_s, broker_run.kpis.t_rec_mean_s, false},
    };
    for (const MetricDef& d : defs) {
        double dm = degradation(d.mesh_v, d.full_v, d.higher);
        double dd = degradation(d.d2m_v, d.full_v, d.higher);
        double db = degradation(d.broker_v, d.full_v, d.higher);
        double total = dm + dd + db;
        if (total <= 0.0) continue;
        AttributionRow row;
        row.metric = d.name;
        row.mesh_share = dm / total;
        row.d2m_share = dd / total;
        row.broker_share = db / total;
        rows.push_back(row);
    }
    return rows;
}

std::string run_result_to_json_text(const ScenarioConfig& config,
                                    const RunResult& r) {
    nlohmann::json j;
    j["scenario"] = config.name;
    j["mode"] = to_string(r.mode);
    j["seed"] = r.seed;
    j["sample_count"] = r.samples.size();
    nlohmann::json k;
    const KpiSnapshot& s = r.kpis;
    k["latency_p95_ms"] = s.latency_p95_ms;
    k["latency_mean_ms"] = s.latency_mean_ms;
    k["queueing_mean_ms"] = s.queueing_mean_ms;
    k["throughput_mean_mbps"] = s.throughput_mean_mbps;
    k["loss_rate"] = s.loss_rate;
    k["jain_mean"] = s.jain_mean;
    k["cqs"] = s.cqs;
    k["gpl"] = s.gpl;
    k["gpi"] = s.gpi;
    k["rho_u"] = s.rho_u;
    k["rho_peak"] = s.rho_peak;
    k["beff_peak"] = s.beff_peak;
    k["beff_mean"] = s.beff_mean;
    k["delta_r"] = s.delta_r;
    k["t_rec_mean_s"] = s.t_rec_mean_s;
    k["t_rec_single_mean_s"] = s.t_rec_single_mean_s;
    k["t_rec_multi_mean_s"] = s.t_rec_multi_mean_s;
    k["recovery_count"] = s.recovery_count;
    j["kpis"] = k;
    nlohmann::json events = nlohmann::json::array();
    for (const RecoveryEvent& e : r.recovery_events)
        events.push_back({{"time_s", e.time_s},
                          {"t_sdwmn_s", e.t_sdwmn_s},
                          {"t_kafka_s", e.t_kafka_s},
                          {"t_rec_s", e.t_rec_s},
                          {"kind", e.kind == FailureKind::SingleNode ? "single_node"
                                                                     : "multi_node"}});
    j["recovery_events"] = events;
    return j.dump(2) + "\n";
}

std::string samples_to_csv(const RunResult& r) {
    std::ostringstream out;
    out << "t,lambda_mbps,rho,latency_ms,throughput_mbps,loss,beff,alpha_s\n";
    out.setf(std::ios::fixed);
    out.precision(6);
    for (const StepSample& s : r.samples)
        out << s.t << ',' << s.lambda_mbps << ',' << s.rho << ',' << s.latency_ms
            << ',' << s.throughput_mbps << ',' << s.loss << ',' << s.beff << ','
            << s.alpha_s << '\n';
    return out.str();
}

std::string comparison_to_json_text(const ComparisonReport& report) {
    nlohmann::json j;
    nlohmann::json metrics = nlohmann::json::array();
    for (const MetricComparison& m : report.metrics)
        metrics.push_back({{"name", m.name},
                           {"baseline_mean", m.baseline_mean},
                           {"proposed_mean", m.proposed_mean},
                           {"baseline_ci_half_width", m.baseline_half_width},
                           {"proposed_ci_half_width", m.proposed_half_width},
                           {"improvement", m.delta},
                           {"higher_is_better", m.higher_is_better}});
    j["metrics"] = metrics;
    nlohmann::json attr = nlohmann::json::array();
    for (const AttributionRow& a : report.attribution)
        attr.push_back({{"metric", a.metric},
                        {"mesh_share", a.mesh_share},
                        {"d2m_share", a.d2m_share},
                        {"broker_share", a.broker_share}});
    j["attribution"] = attr;
    return j.dump(2) + "\n";
}

}  // namespace meshwave
