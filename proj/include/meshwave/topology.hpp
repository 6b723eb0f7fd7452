#pragma once

#include <string>
#include <vector>

namespace meshwave {

enum class NodeKind { MeshRouter, Broker, EdgeServer, D2MTransmitter, UserDevice };
enum class Medium { Wired, Wireless };
enum class AreaTag { Urban, Suburban, Rural };

struct Node {
    int id = 0;
    NodeKind kind = NodeKind::MeshRouter;
    AreaTag area = AreaTag::Urban;
};

struct Link {
    int a = 0;
    int b = 0;
    Medium medium = Medium::Wireless;
    double capacity_mbps = 0.0;
    double propagation_ms = 0.0;
};

struct Topology {
    std::vector<Node> nodes;
    std::vector<Link> links;

    const Node* find_node(int id) const;
    bool is_infrastructure(int id) const;
    std::vector<int> infrastructure_ids() const;
};

// Everything that is not a user device participates in routing.
inline bool is_infrastructure_kind(NodeKind k) {
    return k != NodeKind::UserDevice;
}

struct InfrastructureSummary {
    int mesh_routers = 0;   // N
    int brokers = 0;        // M
    int edge_servers = 0;   // E_s
    int d2m_transmitters = 0;
    int user_devices = 0;
    int total_nodes = 0;    // |V|
    int total_links = 0;    // |E|
};

InfrastructureSummary infrastructure_summary(const Topology& topology);

std::string to_string(NodeKind k);
std::string to_string(Medium m);
std::string to_string(AreaTag a);

}  // namespace meshwave
