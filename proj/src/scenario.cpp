#include "meshwave/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "meshwave/errors.hpp"

namespace meshwave {

using nlohmann::json;

namespace {

NodeKind node_kind_from(const std::string& s) {
    if (s == "mesh_router") return NodeKind::MeshRouter;
    if (s == "broker") return NodeKind::Broker;
    if (s == "edge_server") return NodeKind::EdgeServer;
    if (s == "d2m_transmitter") return NodeKind::D2MTransmitter;
    if (s == "user_device") return NodeKind::UserDevice;
    throw ParseError("unknown node kind: " + s);
}

AreaTag area_from(const std::string& s) {
    if (s == "urban") return AreaTag::Urban;
    if (s == "suburban") return AreaTag::Suburban;
    if (s == "rural") return AreaTag::Rural;
    throw ParseError("unknown area tag: " + s);
}

Medium medium_from(const std::string& s) {
    if (s == "wired") return Medium::Wired;
    if (s == "wireless") return Medium::Wireless;
    throw ParseError("unknown link medium: " + s);
}

Mode mode_from(const std::string& s) {
    if (s == "baseline") return Mode::Baseline;
    if (s == "proposed") return Mode::Proposed;
    throw ParseError("unknown mode: " + s);
}

Schedule schedule_from(const json& j) {
    Schedule s;
    for (const auto& p : j)
        s.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return s;
}

json schedule_to(const Schedule& s) {
    json j = json::array();
    for (const auto& [t, v] : s.points) j.push_back(json::array({t, v}));
    return j;
}

TriangularDist tri_from(const json& j) {
    return TriangularDist{j.at(0).get<double>(), j.at(1).get<double>(),
                          j.at(2).get<double>()};
}

json tri_to(const TriangularDist& t) {
    return json::array({t.lo, t.mode, t.hi});
}

ScenarioConfig parse_config(const json& j) {
    ScenarioConfig c;
    c.name = j.value("name", std::string{});
    c.mode = mode_from(j.at("mode").get<std::string>());
    c.duration_s = j.at("duration_s").get<double>();
    c.sample_interval_s = j.value("sample_interval_s", 1.0);
    c.seed = j.value("seed", std::uint64_t{1});
    c.replications = j.value("replications", 10);

    const auto& topo = j.at("topology");
    for (const auto& n : topo.at("nodes")) {
        Node node;
        node.id = n.at("id").get<int>();
        node.kind = node_kind_from(n.at("kind").get<std::string>());
        node.area = area_from(n.value("area", std::string("urban")));
        c.topology.nodes.push_back(node);
    }
    if (topo.contains("links")) {
        for (const auto& l : topo.at("links")) {
            Link link;
            link.a = l.at("a").get<int>();
            link.b = l.at("b").get<int>();
            link.medium = medium_from(l.value("medium", std::string("wireless")));
            link.capacity_mbps = l.at("capacity_mbps").get<double>();
            link.propagation_ms = l.value("propagation_ms", 0.0);
            c.topology.links.push_back(link);
        }
    }

    const auto& tr = j.at("traffic");
    c.traffic.user_rate = schedule_from(tr.at("user_rate"));
    c.traffic.video_rate = schedule_from(tr.at("video_rate"));
    c.traffic.mean_session_duration_s = tr.at("mean_session_duration_s").get<double>();
    c.traffic.per_session_bandwidth_mbps =
        tr.value("per_session_bandwidth_mbps", 2.0);
    c.traffic.session_bandwidth_cv = tr.value("session_bandwidth_cv", 0.0);
    c.traffic.viewer_fraction = tr.value("viewer_fraction", 0.4);
    c.traffic.total_capacity_mbps = tr.at("total_capacity_mbps").get<double>();

    if (j.contains("spectrum")) {
        const auto& sp = j.at("spectrum");
        c.spectrum.s_total_mhz = sp.value("s_total_mhz", c.spectrum.s_total_mhz);
        c.spectrum.alpha_s = sp.value("alpha_s", c.spectrum.alpha_s);
        c.spectrum.eta_d2m = sp.value("eta_d2m", c.spectrum.eta_d2m);
        c.spectrum.broadcast_bitrate_mbps =
            sp.value("broadcast_bitrate_mbps", c.spectrum.broadcast_bitrate_mbps);
        c.spectrum.gamma_th = sp.value("gamma_th", c.spectrum.gamma_th);
        c.spectrum.p_d2m_mw = sp.value("p_d2m_mw", c.spectrum.p_d2m_mw);
        c.spectrum.n0_mw = sp.value("n0_mw", c.spectrum.n0_mw);
        c.spectrum.i_unic_coeff_mw_per_mhz =
            sp.value("i_unic_coeff_mw_per_mhz", c.spectrum.i_unic_coeff_mw_per_mhz);
    }
    if (j.contains("beff_curve")) {
        c.beff_curve.anchors.clear();
        for (const auto& a : j.at("beff_curve"))
            c.beff_curve.anchors.emplace_back(a.at(0).get<double>(),
                                              a.at(1).get<double>());
    }
    if (j.contains("failure_plan")) {
        const auto& fp = j.at("failure_plan");
        c.failure_plan.count = fp.value("count", 0);
        c.failure_plan.multi_fraction = fp.value("multi_fraction", 0.0);
        c.failure_plan.horizon_s = fp.value("horizon_s", c.duration_s);
        c.failure_plan.affected_fraction = fp.value("affected_fraction", 0.3);
        c.failure_plan.transient_rate_per_s = fp.value("transient_rate_per_s", 0.0);
        c.failure_plan.transient_max_duration_s =
            fp.value("transient_max_duration_s", 0.0);
        c.failure_plan.transient_affected_fraction =
            fp.value("transient_affected_fraction", 0.0);
    }
    if (j.contains("broker")) {
        const auto& b = j.at("broker");
        c.broker.size = b.value("size", c.broker.size);
        c.broker.replication_factor =
            b.value("replication_factor", c.broker.replication_factor);
        c.broker.buffer_seconds = b.value("buffer_seconds", c.broker.buffer_seconds);
        std::string fm = b.value("failover_mode", std::string("dual_layer"));
        if (fm == "dual_layer") c.broker.failover_mode = FailoverMode::DualLayer;
        else if (fm == "centralized") c.broker.failover_mode = FailoverMode::Centralized;
        else throw ParseError("unknown failover mode: " + fm);
    }
    if (j.contains("recovery")) {
        const auto& r = j.at("recovery");
        auto get = [&](const char* key, TriangularDist& d) {
            if (r.contains(key)) d = tri_from(r.at(key));
        };
        get("sdwmn_dual_single", c.recovery.sdwmn_dual_single);
        get("sdwmn_dual_multi", c.recovery.sdwmn_dual_multi);
        get("sdwmn_central_single", c.recovery.sdwmn_central_single);
        get("sdwmn_central_multi", c.recovery.sdwmn_central_multi);
        get("kafka_dual_single", c.recovery.kafka_dual_single);
        get("kafka_dual_multi", c.recovery.kafka_dual_multi);
        get("kafka_central_single", c.recovery.kafka_central_single);
        get("kafka_central_multi", c.recovery.kafka_central_multi);
        c.recovery.single_replica_penalty =
            r.value("single_replica_penalty", c.recovery.single_replica_penalty);
    }
    if (j.contains("weights")) {
        const auto& w = j.at("weights");
        auto fill = [&](const char* key, auto& arr) {
            if (!w.contains(key)) return;
            const auto& v = w.at(key);
            for (std::size_t i = 0; i < arr.size() && i < v.size(); ++i)
                arr[i] = v[i].get<double>();
        };
        fill("gpl", c.weights.gpl);
        fill("gpi", c.weights.gpi);
        fill("cqs", c.weights.cqs);
        fill("ps", c.weights.ps);
    }
    if (j.contains("policy")) c.policy.delta_r = j.at("policy").value("delta_r", 0.0);
    if (j.contains("engine")) {
        const auto& e = j.at("engine");
        EngineParams& p = c.engine;
        p.v_sdn_hops_per_ms = e.value("v_sdn_hops_per_ms", p.v_sdn_hops_per_ms);
        p.queue_service_rate_per_s =
            e.value("queue_service_rate_per_s", p.queue_service_rate_per_s);
        p.base_propagation_ms = e.value("base_propagation_ms", p.base_propagation_ms);
        p.latency_cap_ms = e.value("latency_cap_ms", p.latency_cap_ms);
        p.utilization_cap = e.value("utilization_cap", p.utilization_cap);
        p.contention_threshold = e.value("contention_threshold", p.contention_threshold);
        p.contention_slope = e.value("contention_slope", p.contention_slope);
        p.monopolization_slope =
            e.value("monopolization_slope", p.monopolization_slope);
        p.latency_max_ms = e.value("latency_max_ms", p.latency_max_ms);
        p.throughput_max_mbps = e.value("throughput_max_mbps", p.throughput_max_mbps);
        p.t_rec_norm_s = e.value("t_rec_norm_s", p.t_rec_norm_s);
        p.cost_efficiency = e.value("cost_efficiency", p.cost_efficiency);
        if (e.contains("gateway_ids"))
            p.gateway_ids = e.at("gateway_ids").get<std::vector<int>>();
    }

    // Baseline mode: no spectrum carved out for broadcast, no broker
    // assist (Table of configurations: minimal fault tolerance)
    if (c.mode == Mode::Baseline) {
        c.spectrum.alpha_s = 0.0;
        c.broker.buffer_seconds = 0.0;
        c.broker.failover_mode = FailoverMode::Centralized;
    }
    return c;
}

bool infra_connected(const Topology& t) {
    std::vector<int> infra = t.infrastructure_ids();
    if (infra.size() <= 1) return true;
    std::unordered_set<int> infra_set(infra.begin(), infra.end());
    std::unordered_set<int> seen{infra.front()};
    std::deque<int> queue{infra.front()};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const Link& l : t.links) {
            int other = -1;
            if (l.a == u) other = l.b;
            else if (l.b == u) other = l.a;
            if (other < 0 || !infra_set.count(other) || seen.count(other)) continue;
            seen.insert(other);
            queue.push_back(other);
        }
    }
    return seen.size() == infra.size();
}

}  // namespace

std::vector<std::string> validate(const ScenarioConfig& c) {
    std::vector<std::string> v;

    std::set<int> ids;
    bool dup = false;
    for (const Node& n : c.topology.nodes)
        if (!ids.insert(n.id).second) dup = true;
    if (dup) v.push_back("node ids must be unique");

    bool any_infra = false;
    for (const Node& n : c.topology.nodes)
        if (is_infrastructure_kind(n.kind)) any_infra = true;
    if (!any_infra)
        v.push_back("topology must contain at least one infrastructure node");

    for (const Link& l : c.topology.links) {
        if (l.a == l.b) v.push_back("link endpoints must be distinct");
        if (!ids.count(l.a) || !ids.count(l.b))
            v.push_back("link endpoints must exist in the topology");
        if (l.capacity_mbps <= 0.0) v.push_back("link capacity must be > 0");
        if (l.propagation_ms < 0.0) v.push_back("link propagation delay must be >= 0");
    }
    if (any_infra && !infra_connected(c.topology))
        v.push_back("infrastructure subgraph must be connected");

    if (c.duration_s <= 0.0) v.push_back("duration must be > 0");
    if (c.sample_interval_s <= 0.0) v.push_back("sample interval must be > 0");
    if (c.duration_s > 0.0 && c.sample_interval_s > 0.0) {
        double steps = c.duration_s / c.sample_interval_s;
        if (std::abs(steps - std::round(steps)) > 1e-9)
            v.push_back("duration must be divisible by the sample interval");
    }
    if (c.replications < 1) v.push_back("replications must be >= 1");

    for (const auto& [t, rate] : c.traffic.user_rate.points)
        if (rate < 0.0) v.push_back("user rate schedule values must be >= 0");
    for (const auto& [t, rate] : c.traffic.video_rate.points)
        if (rate < 0.0) v.push_back("video rate schedule values must be >= 0");
    if (c.traffic.mean_session_duration_s <= 0.0)
        v.push_back("mean session duration must be > 0");
    if (c.traffic.total_capacity_mbps <= 0.0)
        v.push_back("total capacity must be > 0");
    if (c.traffic.per_session_bandwidth_mbps < 0.0)
        v.push_back("per-session bandwidth must be >= 0");
    if (c.traffic.viewer_fraction < 0.0 || c.traffic.viewer_fraction > 1.0)
        v.push_back("viewer fraction must lie in [0,1]");

    if (c.spectrum.alpha_s < 0.0 || c.spectrum.alpha_s >= 0.2)
        v.push_back("alpha_s must lie in [0, 0.2)");
    if (c.spectrum.s_total_mhz <= 0.0) v.push_back("total spectrum must be > 0");
    if (c.spectrum.eta_d2m <= 0.0) v.push_back("spectral efficiency must be > 0");
    if (c.spectrum.gamma_th <= 0.0) v.push_back("SINR threshold must be > 0");
    if (c.spectrum.n0_mw <= 0.0) v.push_back("noise floor must be > 0");

    const auto& a = c.beff_curve.anchors;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].second < 0.0 || a[i].second > 1.0) {
            v.push_back("B_eff anchors must lie in [0,1]");
            break;
        }
    }
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i].first <= a[i - 1].first) {
            v.push_back("B_eff anchors must be strictly increasing in alpha_s");
            break;
        }
    }
    // Diminishing returns over the measured anchors. The leading segment
    // out of a (0,0) origin is exempt: that anchor is the physically
    // forced zero-allocation point, not a measurement.
    std::size_t first_slope_check =
        (!a.empty() && a.front().first == 0.0 && a.front().second == 0.0) ? 3 : 2;
    for (std::size_t i = first_slope_check; i < a.size(); ++i) {
        double s1 = (a[i - 1].second - a[i - 2].second) /
                    (a[i - 1].first - a[i - 2].first);
        double s2 = (a[i].second - a[i - 1].second) / (a[i].first - a[i - 1].first);
        if (s2 > s1 + 1e-9) {
            v.push_back("B_eff curve must be concave");
            break;
        }
    }

    if (c.broker.size < 1) v.push_back("broker cluster size must be >= 1");
    if (c.broker.replication_factor < 1 ||
        c.broker.replication_factor > c.broker.size)
        v.push_back("replication factor must lie in [1, cluster size]");
    if (c.broker.buffer_seconds < 0.0) v.push_back("buffer seconds must be >= 0");

    if (c.failure_plan.count < 0) v.push_back("failure count must be >= 0");
    if (c.failure_plan.count > 0 && c.failure_plan.horizon_s <= 0.0)
        v.push_back("failure horizon must be > 0 when failures are planned");
    if (c.failure_plan.multi_fraction < 0.0 || c.failure_plan.multi_fraction > 1.0)
        v.push_back("multi-node failure fraction must lie in [0,1]");
    if (c.failure_plan.affected_fraction < 0.0 ||
        c.failure_plan.affected_fraction > 1.0)
        v.push_back("affected traffic fraction must lie in [0,1]");
    if (c.failure_plan.transient_affected_fraction < 0.0 ||
        c.failure_plan.transient_affected_fraction > 1.0)
        v.push_back("transient affected fraction must lie in [0,1]");
    if (c.failure_plan.transient_rate_per_s < 0.0)
        v.push_back("transient outage rate must be >= 0");

    for (double w : c.weights.gpl)
        if (w < 0.0) { v.push_back("gpl weights must be >= 0"); break; }
    for (double w : c.weights.cqs)
        if (w < 0.0) { v.push_back("cqs weights must be >= 0"); break; }
    for (double w : c.weights.ps)
        if (w < 0.0) { v.push_back("ps weights must be >= 0"); break; }
    double gpi_sum = c.weights.gpi[0] + c.weights.gpi[1] + c.weights.gpi[2];
    if (std::abs(gpi_sum - 1.0) > 1e-9) v.push_back("gpi weights must sum to 1");

    if (c.policy.delta_r < 0.0 || c.policy.delta_r > 1.0)
        v.push_back("coverage deficit must lie in [0,1]");
    if (c.engine.v_sdn_hops_per_ms <= 0.0)
        v.push_back("controller rate must be > 0");
    if (c.engine.queue_service_rate_per_s <= 0.0)
        v.push_back("queue service rate must be > 0");
    for (int g : c.engine.gateway_ids)
        if (!c.topology.is_infrastructure(g))
            v.push_back("gateways must be infrastructure nodes");

    if (c.mode == Mode::Baseline && c.spectrum.alpha_s != 0.0)
        v.push_back("baseline mode requires alpha_s = 0");

    return v;
}

ScenarioConfig scenario_from_json_text(const std::string& text,
                                       const std::string& origin) {
    json j;
    try {
        j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    ScenarioConfig c;
    try {
        c = parse_config(j);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    auto violations = validate(c);
    if (!violations.empty()) throw ValidationError(origin + ": " + violations.front());
    return c;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str(), path);
}

std::string scenario_to_json_text(const ScenarioConfig& c) {
    json j;
    j["name"] = c.name;
    j["mode"] = to_string(c.mode);
    j["duration_s"] = c.duration_s;
    j["sample_interval_s"] = c.sample_interval_s;
    j["seed"] = c.seed;
    j["replications"] = c.replications;

    json nodes = json::array();
    for (const Node& n : c.topology.nodes)
        nodes.push_back({{"id", n.id},
                         {"kind", to_string(n.kind)},
                         {"area", to_string(n.area)}});
    json links = json::array();
    for (const Link& l : c.topology.links)
        links.push_back({{"a", l.a},
                         {"b", l.b},
                         {"medium", to_string(l.medium)},
                         {"capacity_mbps", l.capacity_mbps},
                         {"propagation_ms", l.propagation_ms}});
    j["topology"] = {{"nodes", nodes}, {"links", links}};

    j["traffic"] = {
        {"user_rate", schedule_to(c.traffic.user_rate)},
        {"video_rate", schedule_to(c.traffic.video_rate)},
        {"mean_session_duration_s", c.traffic.mean_session_duration_s},
        {"per_session_bandwidth_mbps", c.traffic.per_session_bandwidth_mbps},
        {"session_bandwidth_cv", c.traffic.session_bandwidth_cv},
        {"viewer_fraction", c.traffic.viewer_fraction},
        {"total_capacity_mbps", c.traffic.total_capacity_mbps}};

    j["spectrum"] = {{"s_total_mhz", c.spectrum.s_total_mhz},
                     {"alpha_s", c.spectrum.alpha_s},
                     {"eta_d2m", c.spectrum.eta_d2m},
                     {"broadcast_bitrate_mbps", c.spectrum.broadcast_bitrate_mbps},
                     {"gamma_th", c.spectrum.gamma_th},
                     {"p_d2m_mw", c.spectrum.p_d2m_mw},
                     {"n0_mw", c.spectrum.n0_mw},
                     {"i_unic_coeff_mw_per_mhz", c.spectrum.i_unic_coeff_mw_per_mhz}};

    json curve = json::array();
    for (const auto& [x, y] : c.beff_curve.anchors)
        curve.push_back(json::array({x, y}));
    j["beff_curve"] = curve;

    j["failure_plan"] = {
        {"count", c.failure_plan.count},
        {"multi_fraction", c.failure_plan.multi_fraction},
        {"horizon_s", c.failure_plan.horizon_s},
        {"affected_fraction", c.failure_plan.affected_fraction},
        {"transient_rate_per_s", c.failure_plan.transient_rate_per_s},
        {"transient_max_duration_s", c.failure_plan.transient_max_duration_s},
        {"transient_affected_fraction", c.failure_plan.transient_affected_fraction}};

    j["broker"] = {{"size", c.broker.size},
                   {"replication_factor", c.broker.replication_factor},
                   {"buffer_seconds", c.broker.buffer_seconds},
                   {"failover_mode", c.broker.failover_mode == FailoverMode::DualLayer
                                         ? "dual_layer"
                                         : "centralized"}};

    j["recovery"] = {
        {"sdwmn_dual_single", tri_to(c.recovery.sdwmn_dual_single)},
        {"sdwmn_dual_multi", tri_to(c.recovery.sdwmn_dual_multi)},
        {"sdwmn_central_single", tri_to(c.recovery.sdwmn_central_single)},
        {"sdwmn_central_multi", tri_to(c.recovery.sdwmn_central_multi)},
        {"kafka_dual_single", tri_to(c.recovery.kafka_dual_single)},
        {"kafka_dual_multi", tri_to(c.recovery.kafka_dual_multi)},
        {"kafka_central_single", tri_to(c.recovery.kafka_central_single)},
        {"kafka_central_multi", tri_to(c.recovery.kafka_central_multi)},
        {"single_replica_penalty", c.recovery.single_replica_penalty}};

    j["weights"] = {{"gpl", c.weights.gpl},
                    {"gpi", c.weights.gpi},
                    {"cqs", c.weights.cqs},
                    {"ps", c.weights.ps}};
    j["policy"] = {{"delta_r", c.policy.delta_r}};
    j["engine"] = {{"v_sdn_hops_per_ms", c.engine.v_sdn_hops_per_ms},
                   {"queue_service_rate_per_s", c.engine.queue_service_rate_per_s},
                   {"base_propagation_ms", c.engine.base_propagation_ms},
                   {"latency_cap_ms", c.engine.latency_cap_ms},
                   {"utilization_cap", c.engine.utilization_cap},
                   {"contention_threshold", c.engine.contention_threshold},
                   {"contention_slope", c.engine.contention_slope},
                   {"monopolization_slope", c.engine.monopolization_slope},
                   {"latency_max_ms", c.engine.latency_max_ms},
                   {"throughput_max_mbps", c.engine.throughput_max_mbps},
                   {"t_rec_norm_s", c.engine.t_rec_norm_s},
                   {"cost_efficiency", c.engine.cost_efficiency},
                   {"gateway_ids", c.engine.gateway_ids}};
    return j.dump(2) + "\n";
}

void save_scenario(const ScenarioConfig& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << scenario_to_json_text(c);
}

std::string to_string(Mode m) {
    return m == Mode::Baseline ? "baseline" : "proposed";
}

}  // namespace meshwave
