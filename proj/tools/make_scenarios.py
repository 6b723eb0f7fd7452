#!/usr/bin/env python3
"""Generates the bundled scenario fixtures under data/scenarios/.

Each area comes as a baseline/proposed pair that differs only in the
operating mode and the mode-dependent knobs (spectrum share, broker
buffering/failover, coverage deficit, cost efficiency). Re-running the
script rewrites the files deterministically.
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "scenarios")


def grid_topology(rows, cols, brokers, edges, d2ms, users,
                  broker_attach, edge_attach, d2m_attach, area):
    nodes = []
    links = []
    rid = lambda r, c: 1 + r * cols + c
    for r in range(rows):
        for c in range(cols):
            nodes.append({"id": rid(r, c), "kind": "mesh_router", "area": area})
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                links.append({"a": rid(r, c), "b": rid(r, c + 1),
                              "medium": "wireless", "capacity_mbps": 100,
                              "propagation_ms": 1.0})
            if r + 1 < rows:
                links.append({"a": rid(r, c), "b": rid(r + 1, c),
                              "medium": "wireless", "capacity_mbps": 100,
                              "propagation_ms": 1.0})

    def attach(count, base_id, kind, attach_to, capacity):
        for i in range(count):
            nid = base_id + i
            nodes.append({"id": nid, "kind": kind, "area": area})
            links.append({"a": attach_to[i % len(attach_to)], "b": nid,
                          "medium": "wired", "capacity_mbps": capacity,
                          "propagation_ms": 0.5})

    attach(brokers, 101, "broker", broker_attach, 1000)
    attach(edges, 111, "edge_server", edge_attach, 1000)
    attach(d2ms, 121, "d2m_transmitter", d2m_attach, 500)
    for i in range(users):
        nodes.append({"id": 201 + i, "kind": "user_device", "area": area})
    return {"nodes": nodes, "links": links}


def scenario(name, area, topology, gateways, scale, mode):
    """scale multiplies the offered traffic and capacity together, so the
    utilization profile (and thus all ratio KPIs) is scale-invariant."""
    proposed = mode == "proposed"
    # daily profile: overnight lull, morning shoulder, long busy daytime
    # plateau, evening peak
    user_rate = [[0, 0.15 * scale], [21600, 0.30 * scale],
                 [28800, 0.45 * scale], [72000, 0.50 * scale]]
    # broadcast-eligible (video) demand tracks the active population at
    # ~18.7 Mbps per active session on average
    video_rate = [[0, 1683 * scale], [21600, 3366 * scale],
                  [28800, 5049 * scale], [72000, 5610 * scale]]
    return {
        "name": name,
        "mode": mode,
        "duration_s": 86400,
        "sample_interval_s": 1.0,
        "seed": 42,
        "replications": 10,
        "topology": topology,
        "traffic": {
            "user_rate": user_rate,
            "video_rate": video_rate,
            "mean_session_duration_s": 600.0,
            "per_session_bandwidth_mbps": 28.0,
            "session_bandwidth_cv": 0.29,
            "viewer_fraction": 0.7,
            "total_capacity_mbps": 12500.0 * scale,
        },
        "spectrum": {
            "s_total_mhz": 22222.222 * scale,
            "alpha_s": 0.12 if proposed else 0.0,
            "eta_d2m": 2.1,
            "broadcast_bitrate_mbps": 25.0,
            "gamma_th": 4.0,
            "p_d2m_mw": 380.0,
            "n0_mw": 1.0,
            "i_unic_coeff_mw_per_mhz": 100.0 / (22222.222 * scale),
        },
        "failure_plan": {
            "count": 8,
            "multi_fraction": 0.25,
            "horizon_s": 86400,
            "affected_fraction": 0.3,
            "transient_rate_per_s": 0.02733,
            "transient_max_duration_s": 12.0,
            "transient_affected_fraction": 0.25,
        },
        "broker": {
            "size": 5,
            "replication_factor": 3,
            "buffer_seconds": 4.0 if proposed else 0.0,
            "failover_mode": "dual_layer" if proposed else "centralized",
        },
        "policy": {"delta_r": 0.46 if proposed else 0.64},
        "engine": {
            "v_sdn_hops_per_ms": 0.061,
            "queue_service_rate_per_s": 500.0,
            "base_propagation_ms": 3.0,
            "contention_threshold": 0.8,
            "contention_slope": 1.38,
            "monopolization_slope": 6.0,
            "cost_efficiency": 0.85 if proposed else 0.80,
            "gateway_ids": gateways,
        },
    }


def write(name, obj):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")
    print("wrote", path)


def main():
    os.makedirs(OUT, exist_ok=True)

    # urban: 7x7 router grid plus one spur router (50 total), 5 brokers,
    # 3 edge servers, 2 broadcast transmitters, 500 user devices
    urban = grid_topology(7, 7, brokers=5, edges=3, d2ms=2, users=500,
                          broker_attach=[9, 13, 25, 37, 41],
                          edge_attach=[17, 25, 33],
                          d2m_attach=[11, 39], area="urban")
    urban["nodes"].insert(49, {"id": 50, "kind": "mesh_router", "area": "urban"})
    urban["links"].append({"a": 49, "b": 50, "medium": "wireless",
                           "capacity_mbps": 100, "propagation_ms": 1.0})
    for mode in ("baseline", "proposed"):
        write(f"urban_{mode}.json",
              scenario(f"urban_{mode}", "urban", urban, [24, 26], 1.0, mode))

    # suburban: 5x5 grid, single broadcast transmitter, 250 user devices
    suburban = grid_topology(5, 5, brokers=3, edges=2, d2ms=1, users=250,
                             broker_attach=[7, 13, 19], edge_attach=[9, 17],
                             d2m_attach=[13], area="suburban")
    for mode in ("baseline", "proposed"):
        write(f"suburban_{mode}.json",
              scenario(f"suburban_{mode}", "suburban", suburban, [13], 0.5, mode))

    # rural: sparse 4x3 grid, 100 user devices
    rural = grid_topology(4, 3, brokers=2, edges=1, d2ms=1, users=100,
                          broker_attach=[5, 8], edge_attach=[6],
                          d2m_attach=[8], area="rural")
    for mode in ("baseline", "proposed"):
        write(f"rural_{mode}.json",
              scenario(f"rural_{mode}", "rural", rural, [6], 0.2, mode))

    # single bottleneck queue at fixed 0.8 utilization: sojourn time must
    # match 1/(mu - lambda) analytically
    sq = {
        "name": "single_queue",
        "mode": "baseline",
        "duration_s": 2000,
        "sample_interval_s": 1.0,
        "seed": 7,
        "replications": 10,
        "topology": {"nodes": [{"id": 1, "kind": "mesh_router", "area": "urban"}],
                     "links": []},
        "traffic": {
            "user_rate": [[0, 400.0]],
            "video_rate": [[0, 0.0]],
            "mean_session_duration_s": 10.0,
            "per_session_bandwidth_mbps": 1.0,
            "session_bandwidth_cv": 0.0,
            "viewer_fraction": 0.0,
            "total_capacity_mbps": 5000.0,
        },
        "spectrum": {"s_total_mhz": 100.0, "alpha_s": 0.0},
        "failure_plan": {"count": 0},
        "broker": {"size": 1, "replication_factor": 1, "buffer_seconds": 0.0,
                   "failover_mode": "centralized"},
        "policy": {"delta_r": 0.0},
        "engine": {
            "queue_service_rate_per_s": 50.0,
            "base_propagation_ms": 0.0,
            "contention_threshold": 1.0,
            "contention_slope": 0.0,
            "gateway_ids": [],
        },
    }
    write("single_queue.json", sq)

    policy_inputs = {
        "subsidy": {
            "c_node_eur": 10000.0,
            "n_nodes": 100,
            "kappa_pts_per_eur": 0.028,
            "lambda_r_eur_per_pt": 5000.0,
            "delta_r_pre": 0.64,
            "r_cov_pre_pct": 36.0,
            "rcg_curve": [[0.0, 0.0], [0.05, 15.0], [0.10, 28.0],
                          [0.15, 30.0], [0.20, 30.5], [0.25, 30.7]],
        },
        "penetration": {"p0": 0.10, "gamma_per_year": 0.208, "mandate": False},
        "ppp": {"i_gov_eur": 10000000.0, "m_f": 1.2},
        "theta": [0.25, 0.25, 0.25, 0.25],
        "beff_curve": [[0.0, 0.0], [0.08, 0.25], [0.12, 0.40],
                       [0.16, 0.42], [0.20, 0.43]],
        "alpha_s": 0.12,
        "m_f_band_max": 1.2,
    }
    path = os.path.join(OUT, "..", "policy_inputs.json")
    with open(path, "w") as f:
        json.dump(policy_inputs, f, indent=2)
        f.write("\n")
    print("wrote", path)


if __name__ == "__main__":
    main()
