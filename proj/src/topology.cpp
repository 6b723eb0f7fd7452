#include "meshwave/topology.hpp"

#include <algorithm>

namespace meshwave {

const Node* Topology::find_node(int id) const {
    auto it = std::find_if(nodes.begin(), nodes.end(),
                           [id](const Node& n) { return n.id == id; });
    return it == nodes.end() ? nullptr : &*it;
}

bool Topology::is_infrastructure(int id) const {
    const Node* n = find_node(id);
    return n != nullptr && is_infrastructure_kind(n->kind);
}

std::vector<int> Topology::infrastructure_ids() const {
    std::vector<int> ids;
    for (const Node& n : nodes)
        if (is_infrastructure_kind(n.kind)) ids.push_back(n.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

InfrastructureSummary infrastructure_summary(const Topology& topology) {
    InfrastructureSummary s;
    for (const Node& n : topology.nodes) {
        switch (n.kind) {
            case NodeKind::MeshRouter: ++s.mesh_routers; break;
            case NodeKind::Broker: ++s.brokers; break;
            case NodeKind::EdgeServer: ++s.edge_servers; break;
            case NodeKind::D2MTransmitter: ++s.d2m_transmitters; break;
            case NodeKind::UserDevice: ++s.user_devices; break;
        }
    }
    s.total_nodes = static_cast<int>(topology.nodes.size());
    s.total_links = static_cast<int>(topology.links.size());
    return s;
}

std::string to_string(NodeKind k) {
    switch (k) {
        case NodeKind::MeshRouter: return "mesh_router";
        case NodeKind::Broker: return "broker";
        case NodeKind::EdgeServer: return "edge_server";
        case NodeKind::D2MTransmitter: return "d2m_transmitter";
        case NodeKind::UserDevice: return "user_device";
    }
    return "unknown";
}

std::string to_string(Medium m) {
    return m == Medium::Wired ? "wired" : "wireless";
}

std::string to_string(AreaTag a) {
    switch (a) {
        case AreaTag::Urban: return "urban";
        case AreaTag::Suburban: return "suburban";
        case AreaTag::Rural: return "rural";
    }
    return "unknown";
}

}  // namespace meshwave
