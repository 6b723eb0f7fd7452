#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace meshwave {

struct ConfidenceInterval {
    double mean = 0.0;
    double half_width = 0.0;
    double level = 0.95;
    std::size_t n = 0;

    double lo() const { return mean - half_width; }
    double hi() const { return mean + half_width; }
};

// Jain fairness index (sum x)^2 / (n * sum x^2); in (0, 1], 1 iff all
// entries equal and nonzero.
double jain_index(const std::vector<double>& throughputs);

// Nearest-rank percentile: sorted sample at rank ceil(p*n), 1-indexed.
double percentile(std::vector<double> samples, double p);

double loss_rate(long long lost, long long sent);

// CQS = eta1*(1 - L/L_max) + eta2*Theta/Theta_max + eta3*J_f with L and
// Theta clamped into [0, max] so the score stays in [0,1] when the
// weights sum to 1.
double cqs(double latency_ms, double latency_max_ms, double throughput_mbps,
           double throughput_max_mbps, double jain, const std::array<double, 3>& eta);

// GPL = w1*rho_u + w2*delta_r + w3*t_rec_norm
double gpl(double rho_u, double delta_r, double t_rec_norm,
           const std::array<double, 3>& w);

// GPI = a1*QoS + a2*R_cov + a3*C_eff; weights must sum to 1 (+-1e-9).
double gpi(double qos, double r_cov, double c_eff, const std::array<double, 3>& alpha);

// (base - now) / base; callers pick the sign convention per metric.
double relative_change(double base, double now);

// Student-t interval mean +- t_{(1-level)/2, n-1} * s / sqrt(n).
// Only the 95% level is supported (embedded t-table, df 1..30 with a
// normal fallback beyond).
ConfidenceInterval confidence_interval(const std::vector<double>& samples,
                                       double level = 0.95);

// 97.5% one-sided Student-t quantile used by the interval.
double t_quantile_975(std::size_t df);

double sample_mean(const std::vector<double>& samples);
double sample_stddev(const std::vector<double>& samples);  // n-1 denominator

}  // namespace meshwave
