#include "meshwave/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "meshwave/errors.hpp"

namespace meshwave {

double jain_index(const std::vector<double>& throughputs) {
    if (throughputs.empty()) throw DomainError("jain index needs >= 1 entry");
    long double sum = 0.0L;
    long double sumsq = 0.0L;
    for (double x : throughputs) {
        if (x < 0.0) throw DomainError("throughputs must be >= 0");
        sum += x;
        sumsq += static_cast<long double>(x) * x;
    }
    if (sumsq == 0.0L) throw DomainError("jain index undefined for all-zero input");
    long double n = static_cast<long double>(throughputs.size());
    return static_cast<double>(sum * sum / (n * sumsq));
}

double percentile(std::vector<double> samples, double p) {
    if (samples.empty()) throw DomainError("percentile of empty sample");
    if (p < 0.0 || p > 1.0) throw DomainError("percentile level must lie in [0,1]");
    std::sort(samples.begin(), samples.end());
    std::size_t n = samples.size();
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(p * static_cast<double>(n)));
    if (rank < 1) rank = 1;
    return samples[rank - 1];
}

double loss_rate(long long lost, long long sent) {
    if (sent <= 0) throw DomainError("nothing sent");
    if (lost < 0 || lost > sent) throw DomainError("lost must lie in [0, sent]");
    return static_cast<double>(lost) / static_cast<double>(sent);
}

double cqs(double latency_ms, double latency_max_ms, double throughput_mbps,
           double throughput_max_mbps, double jain, const std::array<double, 3>& eta) {
    if (latency_max_ms <= 0.0 || throughput_max_mbps <= 0.0)
        throw DomainError("CQS maxima must be > 0");
    for (double w : eta)
        if (w < 0.0) throw DomainError("CQS weights must be >= 0");
    double l = std::clamp(latency_ms, 0.0, latency_max_ms);
    double th = std::clamp(throughput_mbps, 0.0, throughput_max_mbps);
    return eta[0] * (1.0 - l / latency_max_ms) + eta[1] * (th / throughput_max_mbps) +
           eta[2] * jain;
}

double gpl(double rho_u, double delta_r, double t_rec_norm,
           const std::array<double, 3>& w) {
    if (rho_u < 0.0 || delta_r < 0.0 || t_rec_norm < 0.0)
        throw DomainError("GPL inputs must be >= 0");
    return w[0] * rho_u + w[1] * delta_r + w[2] * t_rec_norm;
}

double gpi(double qos, double r_cov, double c_eff, const std::array<double, 3>& alpha) {
    double sum = alpha[0] + alpha[1] + alpha[2];
    if (std::abs(sum - 1.0) > 1e-9) throw DomainError("GPI weights must sum to 1");
    for (double w : alpha)
        if (w < 0.0) throw DomainError("GPI weights must be >= 0");
    return alpha[0] * qos + alpha[1] * r_cov + alpha[2] * c_eff;
}

double relative_change(double base, double now) {
    if (base == 0.0) throw DomainError("relative change undefined for zero base");
    return (base - now) / base;
}

double t_quantile_975(std::size_t df) {
    // two-sided 95% Student-t critical values, df 1..30
    static constexpr double table[30] = {
        12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
        2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
        2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
    if (df == 0) throw DomainError("t quantile needs df >= 1");
    if (df <= 30) return table[df - 1];
    return 1.96;  // normal fallback
}

double sample_mean(const std::vector<double>& samples) {
    if (samples.empty()) throw DomainError("mean of empty sample");
    long double s = 0.0L;
    for (double x : samples) s += x;
    return static_cast<double>(s / static_cast<long double>(samples.size()));
}

double sample_stddev(const std::vector<double>& samples) {
    if (samples.size() < 2) throw DomainError("stddev needs >= 2 samples");
    double m = sample_mean(samples);
    long double acc = 0.0L;
    for (double x : samples) acc += static_cast<long double>(x - m) * (x - m);
    return std::sqrt(static_cast<double>(
        acc / static_cast<long double>(samples.size() - 1)));
}

ConfidenceInterval confidence_interval(const std::vector<double>& samples,
                                       double level) {
    if (samples.size() < 2) throw DomainError("confidence interval needs n >= 2");
    if (std::abs(level - 0.95) > 1e-12)
        throw DomainError("only the 95% level is supported");
    ConfidenceInterval ci;
    ci.n = samples.size();
    ci.level = level;
    ci.mean = sample_mean(samples);
    double s = sample_stddev(samples);
    ci.half_width = t_quantile_975(ci.n - 1) * s /
                    std::sqrt(static_cast<double>(ci.n));
    return ci;
}

}  // namespace meshwave
