#include "meshwave/d2m.hpp"

#include <algorithm>
#include <cmath>

#include "meshwave/errors.hpp"

namespace meshwave {

BeffCurve BeffCurve::defaults() {
    BeffCurve c;
    c.anchors = {{0.00, 0.00}, {0.08, 0.25}, {0.12, 0.40}, {0.16, 0.42}, {0.20, 0.43}};
    return c;
}

double BeffCurve::max_alpha() const {
    return anchors.empty() ? 0.0 : anchors.back().first;
}

std::pair<double, double> split_spectrum(const SpectrumPlan& plan) {
    double s_d2m = plan.alpha_s * plan.s_total_mhz;
    // computed as the complement so the parts sum to s_total exactly
    double s_unic = plan.s_total_mhz - s_d2m;
    return {s_d2m, s_unic};
}

double d2m_capacity(double s_d2m_mhz, double eta) {
    if (s_d2m_mhz < 0.0 || eta < 0.0) throw DomainError("capacity inputs must be >= 0");
    return s_d2m_mhz * eta;
}

double per_user_broadcast_rate(double broadcast_mbps, int viewers) {
    if (viewers < 1) throw DomainError("broadcast idle: no viewers");
    return broadcast_mbps / viewers;
}

double offload_efficiency(double c_d2m_mbps, double eligible_demand_mbps,
                          double total_load_mbps) {
    if (total_load_mbps <= 0.0) throw DomainError("total load must be > 0");
    if (c_d2m_mbps < 0.0 || eligible_demand_mbps < 0.0)
        throw DomainError("offload inputs must be >= 0");
    double carried = std::min(c_d2m_mbps, eligible_demand_mbps);
    return std::clamp(carried / total_load_mbps, 0.0, 1.0);
}

SinrResult sinr(const SpectrumPlan& plan, double s_unic_mhz) {
    double interference = plan.i_unic_coeff_mw_per_mhz * s_unic_mhz;
    SinrResult r;
    r.sinr = plan.p_d2m_mw / (interference + plan.n0_mw);
    r.decodable = r.sinr >= plan.gamma_th;
    return r;
}

double beff_lookup(const BeffCurve& curve, double alpha_s) {
    if (curve.anchors.empty()) throw DomainError("empty B_eff curve");
    if (alpha_s < curve.anchors.front().first || alpha_s > curve.max_alpha())
        throw DomainError("alpha_s outside the B_eff anchor range");
    for (std::size_t i = 1; i < curve.anchors.size(); ++i) {
        const auto& [x0, y0] = curve.anchors[i - 1];
        const auto& [x1, y1] = curve.anchors[i];
        if (alpha_s <= x1) {
            double w = (alpha_s - x0) / (x1 - x0);
            return y0 + w * (y1 - y0);
        }
    }
    return curve.anchors.back().second;
}

double beff_slope(const BeffCurve& curve, double alpha_s) {
    if (curve.anchors.size() < 2) throw DomainError("B_eff curve needs >= 2 anchors");
    if (alpha_s < curve.anchors.front().first || alpha_s > curve.max_alpha())
        throw DomainError("alpha_s outside the B_eff anchor range");
    for (std::size_t i = 1; i < curve.anchors.size(); ++i) {
        const auto& [x0, y0] = curve.anchors[i - 1];
        const auto& [x1, y1] = curve.anchors[i];
        if (alpha_s < x1 || i + 1 == curve.anchors.size())
            return (y1 - y0) / (x1 - x0);
    }
    return 0.0;
}

double adaptive_alpha(const BeffCurve& curve, double alpha_s, bool unicast_qos_ok,
                      bool decodable) {
    if (alpha_s < 0.0 || alpha_s >= 0.2)
        throw DomainError("alpha_s must lie in [0, 0.2)");
    double next = alpha_s;
    if (!unicast_qos_ok || !decodable) {
        next = alpha_s - 0.01;
    } else {
        double slope = beff_slope(curve, std::clamp(alpha_s, 0.0, curve.max_alpha()));
        if (slope > 0.5) next = alpha_s + 0.01;  // still in the steep region
    }
    return std::clamp(next, 0.02, 0.16);
}

}  // namespace meshwave
