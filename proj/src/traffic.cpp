#include "meshwave/traffic.hpp"

#include <algorithm>

#include "meshwave/errors.hpp"

namespace meshwave {

double Schedule::at(double t) const {
    if (points.empty()) return 0.0;
    double value = points.front().second;
    for (const auto& [start, v] : points) {
        if (start > t) break;
        value = v;
    }
    return value;
}

double Schedule::max_value() const {
    double m = 0.0;
    for (const auto& [start, v] : points) m = std::max(m, v);
    return m;
}

int sample_arrivals(double rate_per_s, double dt_s, RngStream& rng) {
    if (rate_per_s < 0.0) throw DomainError("arrival rate must be >= 0");
    if (dt_s <= 0.0) throw DomainError("arrival interval must be > 0");
    return rng.poisson(rate_per_s * dt_s);
}

double sample_session_duration(double mean_s, RngStream& rng) {
    if (mean_s <= 0.0) throw DomainError("mean session duration must be > 0");
    double d = rng.exponential(mean_s);
    // exponential(mean) can underflow to 0 only for u == 1, which the
    // generator never produces, but keep the contract explicit
    return std::max(d, 1e-12);
}

double aggregate_load(double user_mbps, double video_mbps) {
    if (user_mbps < 0.0 || video_mbps < 0.0)
        throw DomainError("load components must be >= 0");
    return user_mbps + video_mbps;
}

double utilization(double offered_mbps, double total_capacity_mbps) {
    if (total_capacity_mbps <= 0.0) throw DomainError("total capacity must be > 0");
    return offered_mbps / total_capacity_mbps;
}

double mm1_latency(double arrival_rate, double service_rate) {
    if (arrival_rate < 0.0) throw DomainError("arrival rate must be >= 0");
    if (service_rate <= arrival_rate)
        throw SaturatedError("M/M/1 saturated: arrival rate >= service rate");
    return 1.0 / (service_rate - arrival_rate);
}

}  // namespace meshwave
