#include "meshwave/broker.hpp"

#include <algorithm>

#include "meshwave/errors.hpp"

namespace meshwave {

const TriangularDist& RecoveryModel::sdwmn(FailoverMode m, FailureKind k) const {
    if (m == FailoverMode::DualLayer)
        return k == FailureKind::SingleNode ? sdwmn_dual_single : sdwmn_dual_multi;
    return k == FailureKind::SingleNode ? sdwmn_central_single : sdwmn_central_multi;
}

const TriangularDist& RecoveryModel::kafka(FailoverMode m, FailureKind k) const {
    if (m == FailoverMode::DualLayer)
        return k == FailureKind::SingleNode ? kafka_dual_single : kafka_dual_multi;
    return k == FailureKind::SingleNode ? kafka_central_single : kafka_central_multi;
}

std::vector<FailureEvent> inject_failures(const FailurePlan& plan,
                                          const Topology& topology, RngStream& rng) {
    if (plan.count < 0) throw DomainError("failure count must be >= 0");
    std::vector<int> infra = topology.infrastructure_ids();
    std::vector<FailureEvent> events;
    events.reserve(static_cast<std::size_t>(plan.count));
    for (int i = 0; i < plan.count; ++i) {
        FailureEvent ev;
        ev.time_s = rng.uniform(0.0, plan.horizon_s);
        bool multi = infra.size() >= 2 && rng.uniform() < plan.multi_fraction;
        ev.kind = multi ? FailureKind::MultiNode : FailureKind::SingleNode;
        int targets = multi ? 2 : 1;
        // without replacement within one event
        std::vector<int> pool = infra;
        for (int t = 0; t < targets && !pool.empty(); ++t) {
            std::size_t pick = static_cast<std::size_t>(rng.uniform_int(pool.size()));
            ev.node_ids.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<long>(pick));
        }
        events.push_back(std::move(ev));
    }
    std::sort(events.begin(), events.end(),
              [](const FailureEvent& a, const FailureEvent& b) {
                  return a.time_s < b.time_s;
              });
    return events;
}

double failover_time(const BrokerCluster& cluster, FailureKind kind,
                     const RecoveryModel& model, RngStream& rng) {
    if (cluster.size < 1) throw DomainError("broker cluster must have >= 1 broker");
    if (cluster.replication_factor < 1 || cluster.replication_factor > cluster.size)
        throw DomainError("replication factor must lie in [1, cluster size]");
    double t = model.kafka(cluster.failover_mode, kind).sample(rng);
    if (cluster.replication_factor == 1)
        t *= 1.0 + model.single_replica_penalty;  // re-replication from scratch
    return t;
}

double compose_recovery(double t_sdwmn_s, double t_kafka_s) {
    if (t_sdwmn_s < 0.0 || t_kafka_s < 0.0)
        throw DomainError("recovery components must be >= 0");
    return t_sdwmn_s + t_kafka_s;
}

double residual_loss(double raw_loss_fraction, double outage_s, double buffer_s) {
    if (raw_loss_fraction < 0.0 || raw_loss_fraction > 1.0)
        throw DomainError("raw loss fraction must lie in [0,1]");
    if (outage_s < 0.0 || buffer_s < 0.0) throw DomainError("times must be >= 0");
    if (outage_s <= 0.0) return 0.0;
    double unabsorbed = std::max(0.0, outage_s - buffer_s);
    return raw_loss_fraction * unabsorbed / outage_s;
}

}  // namespace meshwave
