#pragma once

#include <vector>

#include "meshwave/rng.hpp"
#include "meshwave/topology.hpp"

namespace meshwave {

enum class FailoverMode { Centralized, DualLayer };
enum class FailureKind { SingleNode, MultiNode };

struct BrokerCluster {
    int size = 5;                   // M
    int replication_factor = 3;     // <= size
    double buffer_seconds = 4.0;    // outage seconds the cluster can absorb
    FailoverMode failover_mode = FailoverMode::DualLayer;
};

struct TriangularDist {
    double lo = 0.0;
    double mode = 0.0;
    double hi = 0.0;

    double sample(RngStream& rng) const { return rng.triangular(lo, mode, hi); }
    double mean() const { return (lo + mode + hi) / 3.0; }
};

// Recovery-time distributions per (failover mode, failure kind),
// calibrated so the component means compose to the measured totals:
// dual-layer 8.1 s single / 11.7 s multi, centralized 12.6 / 18.4.
struct RecoveryModel {
    TriangularDist sdwmn_dual_single{3.1, 5.1, 7.1};
    TriangularDist sdwmn_dual_multi{5.4, 7.4, 9.4};
    TriangularDist sdwmn_central_single{6.0, 9.0, 12.0};
    TriangularDist sdwmn_central_multi{9.0, 13.0, 17.0};
    TriangularDist kafka_dual_single{2.0, 3.0, 4.0};
    TriangularDist kafka_dual_multi{3.3, 4.3, 5.3};
    TriangularDist kafka_central_single{2.6, 3.6, 4.6};
    TriangularDist kafka_central_multi{3.9, 5.4, 6.9};
    double single_replica_penalty = 0.5;  // extra re-replication share when rf == 1

    const TriangularDist& sdwmn(FailoverMode m, FailureKind k) const;
    const TriangularDist& kafka(FailoverMode m, FailureKind k) const;
};

struct FailurePlan {
    int count = 0;                  // hardware failures per run
    double multi_fraction = 0.0;    // share of failures hitting 2 nodes
    double horizon_s = 0.0;         // T; instants uniform on [0, T]
    double affected_fraction = 0.3; // traffic share disrupted per hardware failure
    // transient link flaps: frequent short outages absorbed by buffering
    double transient_rate_per_s = 0.0;
    double transient_max_duration_s = 0.0;
    double transient_affected_fraction = 0.0;
};

struct FailureEvent {
    double time_s = 0.0;
    FailureKind kind = FailureKind::SingleNode;
    std::vector<int> node_ids;
};

struct RecoveryEvent {
    double time_s = 0.0;
    double t_sdwmn_s = 0.0;
    double t_kafka_s = 0.0;
    double t_rec_s = 0.0;  // always t_sdwmn + t_kafka exactly
    FailureKind kind = FailureKind::SingleNode;
};

// Draws `plan.count` failure instants i.i.d. uniform on [0, horizon],
// sorted ascending; targets drawn without replacement from the
// infrastructure nodes of `topology`.
std::vector<FailureEvent> inject_failures(const FailurePlan& plan,
                                          const Topology& topology, RngStream& rng);

// Broker-layer recovery component for one failure.
double failover_time(const BrokerCluster& cluster, FailureKind kind,
                     const RecoveryModel& model, RngStream& rng);

// T_rec = T_SDWMN + T_Kafka
double compose_recovery(double t_sdwmn_s, double t_kafka_s);

// Buffered outage loss: the first buffer_seconds of an outage are
// absorbed; loss accrues proportionally for the remainder.
double residual_loss(double raw_loss_fraction, double outage_s, double buffer_s);

}  // namespace meshwave
