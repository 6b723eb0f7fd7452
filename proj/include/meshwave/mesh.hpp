#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "meshwave/broker.hpp"
#include "meshwave/rng.hpp"
#include "meshwave/topology.hpp"

namespace meshwave {

// All-pairs minimum-hop routing over the infrastructure subgraph.
// "Mesh diameter" d_mesh is the mean shortest-path hop count over
// connected ordered pairs (the max-eccentricity reading cannot produce
// the fractional values the measurements show).
struct RoutingState {
    std::vector<int> ids;                    // infrastructure node ids, ascending
    std::vector<std::vector<int>> next_hop;  // -1 when unreachable / self
    std::vector<std::vector<int>> dist;      // hops, -1 when unreachable
    double d_mesh = 0.0;
    std::size_t connected_pairs = 0;         // ordered pairs with a path
    double v_sdn_hops_per_ms = 0.05;
    std::vector<int> gateways;               // non-empty => star routing

    int index_of(int id) const;  // -1 when not an infrastructure node
    int hops(int from_id, int to_id) const;  // -1 when unreachable
};

// Shortest-path routes among infrastructure nodes. When `gateways` is
// non-empty, routes are constrained through the best gateway
// (src -> gateway -> dst), modeling conventional star attachment.
RoutingState compute_routes(const Topology& topology, double v_sdn_hops_per_ms,
                            const std::vector<int>& gateways = {});

// L_mesh = d_mesh / v_sdn
double mesh_latency(double d_mesh_hops, double v_sdn_hops_per_ms);

struct RerouteResult {
    RoutingState state;
    double t_sdwmn_s = 0.0;
    std::size_t unroutable_pairs = 0;  // pairs with no surviving path
};

// Recomputes routes on the surviving graph; rerouting time drawn from
// the configured recovery distribution (0 when nothing failed).
RerouteResult reroute_on_failure(const RoutingState& state, const Topology& topology,
                                 const std::set<int>& failed_node_ids,
                                 const TriangularDist& recovery_dist, RngStream& rng);

// Control-plane message count c * n^2 for n mesh routers.
double control_overhead(int mesh_router_count, double messages_per_pair);

}  // namespace meshwave
