#include "meshwave/mesh.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "meshwave/errors.hpp"

namespace meshwave {

namespace {

// BFS over the infrastructure subgraph, skipping excluded nodes.
// Returns per-source distance and parent arrays indexed like `ids`.
struct BfsTables {
    std::vector<std::vector<int>> dist;    // -1 unreachable
    std::vector<std::vector<int>> parent;  // -1 none
};

BfsTables all_pairs_bfs(const std::vector<int>& ids,
                        const std::vector<std::vector<int>>& adj) {
    std::size_t n = ids.size();
    BfsTables t;
    t.dist.assign(n, std::vector<int>(n, -1));
    t.parent.assign(n, std::vector<int>(n, -1));
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
        auto& dist = t.dist[s];
        auto& parent = t.parent[s];
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : adj[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = static_cast<int>(u);
                    queue.push_back(v);
                }
            }
        }
    }
    return t;
}

std::vector<std::vector<int>> build_adjacency(const Topology& topology,
                                              const std::vector<int>& ids,
                                              const std::set<int>& excluded) {
    std::unordered_map<int, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    std::vector<std::vector<int>> adj(ids.size());
    for (const Link& l : topology.links) {
        auto ia = index.find(l.a);
        auto ib = index.find(l.b);
        if (ia == index.end() || ib == index.end()) continue;
        if (excluded.count(l.a) || excluded.count(l.b)) continue;
        adj[ia->second].push_back(static_cast<int>(ib->second));
        adj[ib->second].push_back(static_cast<int>(ia->second));
    }
    // neighbor order fixed by node id so tie-breaking is deterministic
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return adj;
}

RoutingState routes_excluding(const Topology& topology, double v_sdn,
                              const std::vector<int>& gateways,
                              const std::set<int>& excluded) {
    RoutingState st;
    st.v_sdn_hops_per_ms = v_sdn;
    st.gateways = gateways;
    for (int id : topology.infrastructure_ids())
        if (!excluded.count(id)) st.ids.push_back(id);
    std::size_t n = st.ids.size();
    if (n == 0) throw DomainError("infrastructure subgraph is empty");

    auto adj = build_adjacency(topology, st.ids, excluded);
    BfsTables bfs = all_pairs_bfs(st.ids, adj);

    std::unordered_map<int, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[st.ids[i]] = i;
    std::vector<std::size_t> gw;
    for (int g : gateways) {
        auto it = index.find(g);
        if (it != index.end()) gw.push_back(it->second);
    }

    st.dist.assign(n, std::vector<int>(n, -1));
    st.next_hop.assign(n, std::vector<int>(n, -1));
    long double total = 0.0L;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t d = 0; d < n; ++d) {
            if (s == d) {
                st.dist[s][d] = 0;
                continue;
            }
            int hops = -1;
            std::size_t via = d;  // direct shortest path by default
            if (gw.empty()) {
                hops = bfs.dist[s][d];
            } else {
                // star attachment: best gateway on the s -> g -> d detour;
                // ties broken by the lowest gateway node id (gateway order)
                for (std::size_t g : gw) {
                    int a = bfs.dist[s][g];
                    int b = bfs.dist[g][d];
                    if (a < 0 || b < 0) continue;
                    if (hops < 0 || a + b < hops) {
                        hops = a + b;
                        via = (s == g) ? d : g;
                    }
                }
            }
            if (hops < 0) continue;
            st.dist[s][d] = hops;
            total += hops;
            ++st.connected_pairs;
            // first hop: walk the BFS parent chain from `via` back to s
            std::size_t cur = via;
            if (bfs.dist[s][cur] > 0) {
                while (bfs.parent[s][cur] != static_cast<int>(s))
                    cur = static_cast<std::size_t>(bfs.parent[s][cur]);
                st.next_hop[s][d] = st.ids[cur];
            } else if (cur == d) {
                st.next_hop[s][d] = st.ids[d];
            }
        }
    }
    st.d_mesh = st.connected_pairs == 0
                    ? 0.0
                    : static_cast<double>(total / st.connected_pairs);
    return st;
}

}  // namespace

int RoutingState::index_of(int id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) return -1;
    return static_cast<int>(it - ids.begin());
}

int RoutingState::hops(int from_id, int to_id) const {
    int f = index_of(from_id);
    int t = index_of(to_id);
    if (f < 0 || t < 0) return -1;
    return dist[static_cast<std::size_t>(f)][static_cast<std::size_t>(t)];
}

RoutingState compute_routes(const Topology& topology, double v_sdn_hops_per_ms,
                            const std::vector<int>& gateways) {
    return routes_excluding(topology, v_sdn_hops_per_ms, gateways, {});
}

double mesh_latency(double d_mesh_hops, double v_sdn_hops_per_ms) {
    if (v_sdn_hops_per_ms <= 0.0) throw DomainError("controller rate must be > 0");
    if (d_mesh_hops < 0.0) throw DomainError("mesh diameter must be >= 0");
    return d_mesh_hops / v_sdn_hops_per_ms;
}

RerouteResult reroute_on_failure(const RoutingState& state, const Topology& topology,
                                 const std::set<int>& failed_node_ids,
                                 const TriangularDist& recovery_dist, RngStream& rng) {
    for (int id : failed_node_ids)
        if (topology.find_node(id) == nullptr)
            throw DomainError("failed id not present in topology");
    RerouteResult r;
    if (failed_node_ids.empty()) {
        r.state = state;
        r.t_sdwmn_s = 0.0;
        return r;
    }
    r.state = routes_excluding(topology, state.v_sdn_hops_per_ms, state.gateways,
                               failed_node_ids);
    std::size_t n = r.state.ids.size();
    r.unroutable_pairs = n * (n - 1) - r.state.connected_pairs;
    r.t_sdwmn_s = recovery_dist.sample(rng);
    return r;
}

double control_overhead(int mesh_router_count, double messages_per_pair) {
    if (mesh_router_count < 0 || messages_per_pair < 0.0)
        throw DomainError("overhead inputs must be >= 0");
    return messages_per_pair * static_cast<double>(mesh_router_count) *
           static_cast<double>(mesh_router_count);
}

}  // namespace meshwave
