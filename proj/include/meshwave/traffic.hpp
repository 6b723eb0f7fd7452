#pragma once

#include <utility>
#include <vector>

#include "meshwave/rng.hpp"

namespace meshwave {

// Piecewise-constant schedule: value of the last point whose start time
// is <= t. Points must be sorted by start time; the first point should
// start at 0.
struct Schedule {
    std::vector<std::pair<double, double>> points;  // (start_s, value)

    double at(double t) const;
    double max_value() const;
};

struct TrafficParams {
    Schedule user_rate;           // session arrivals per second
    Schedule video_rate;          // broadcast-eligible demand, Mbps
    double mean_session_duration_s = 180.0;
    double per_session_bandwidth_mbps = 2.0;
    double session_bandwidth_cv = 0.0;  // lognormal spread of per-session demand
    double viewer_fraction = 0.4;       // share of sessions consuming video
    double total_capacity_mbps = 0.0;   // C_tot
};

struct LoadSample {
    double time_s = 0.0;
    double offered_mbps = 0.0;  // Lambda
    double utilization = 0.0;   // rho = Lambda / C_tot, may exceed 1
};

// Poisson-distributed arrival count with mean rate*dt.
int sample_arrivals(double rate_per_s, double dt_s, RngStream& rng);

// Exponential session duration with the given mean, strictly positive.
double sample_session_duration(double mean_s, RngStream& rng);

// Lambda(t) = lambda_u(t) + lambda_v(t)
double aggregate_load(double user_mbps, double video_mbps);

// rho = Lambda / C_tot
double utilization(double offered_mbps, double total_capacity_mbps);

// M/M/1 sojourn time 1/(mu - lambda); throws SaturatedError when
// lambda >= mu.
double mm1_latency(double arrival_rate, double service_rate);

}  // namespace meshwave
