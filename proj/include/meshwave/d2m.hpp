#pragma once

#include <utility>
#include <vector>

namespace meshwave {

struct SpectrumPlan {
    double s_total_mhz = 0.0;
    double alpha_s = 0.0;              // [0, 0.2); 0 means no D2M (baseline)
    double eta_d2m = 2.1;              // spectral efficiency, bits/s/Hz
    double broadcast_bitrate_mbps = 25.0;  // stream quality delivered per viewer
    double gamma_th = 4.0;             // SINR decode threshold, linear
    double p_d2m_mw = 380.0;           // received broadcast power
    double n0_mw = 1.0;                // noise floor
    double i_unic_coeff_mw_per_mhz = 1.0;  // interference per MHz of unicast spectrum
};

// Concave piecewise-linear B_eff(alpha_s) curve through measured anchors.
struct BeffCurve {
    std::vector<std::pair<double, double>> anchors;  // (alpha_s, b_eff), alpha ascending

    // Anchors measured on the trade-off testbed; (0,0) is the physically
    // forced zero-allocation point.
    static BeffCurve defaults();
    double max_alpha() const;
};

struct SinrResult {
    double sinr = 0.0;  // linear ratio
    bool decodable = false;
};

// (s_d2m, s_unic); parts sum to s_total exactly.
std::pair<double, double> split_spectrum(const SpectrumPlan& plan);

// C_D2M = S_D2M * eta, MHz * bits/s/Hz = Mbps
double d2m_capacity(double s_d2m_mhz, double eta);

// R_D2M = B / U: equivalent unicast bandwidth saved per viewer served.
// Throws DomainError when there are no viewers.
double per_user_broadcast_rate(double broadcast_mbps, int viewers);

// B_eff = min(capacity, eligible demand) / total load, clamped to [0,1].
double offload_efficiency(double c_d2m_mbps, double eligible_demand_mbps,
                          double total_load_mbps);

// SINR = P_D2M / (I_unic + N_0) with I_unic proportional to the unicast
// spectrum width.
SinrResult sinr(const SpectrumPlan& plan, double s_unic_mhz);

// Monotone piecewise-linear interpolation through the curve anchors.
double beff_lookup(const BeffCurve& curve, double alpha_s);

// Slope of the curve on the segment containing alpha (right segment at
// anchor points).
double beff_slope(const BeffCurve& curve, double alpha_s);

// Rule-based controller step: +0.01 while the curve is still steep and
// unicast QoS holds, -0.01 on QoS or decodability trouble, clamped to
// [0.02, 0.16].
double adaptive_alpha(const BeffCurve& curve, double alpha_s, bool unicast_qos_ok,
                      bool decodable);

}  // namespace meshwave
