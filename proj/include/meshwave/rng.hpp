#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace meshwave {

// splitmix64: statistically solid for substream derivation and as the
// core generator. Fixed algorithm, so sequences are stable across
// platforms and standard-library versions.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d9b9fb8dc4bdfdULL;
    return z ^ (z >> 31);
}

// Derives an independent substream seed from a root seed and a stream
// name (FNV-1a over the name, mixed with the root).
inline std::uint64_t substream_seed(std::uint64_t root, std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::uint64_t s = root ^ h;
    // one extra round so root=0 streams are still well separated
    splitmix64(s);
    return splitmix64(s);
}

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform on [0, 1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    std::uint64_t uniform_int(std::uint64_t n) {
        // rejection sampling to avoid modulo bias
        if (n == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    double exponential(double mean) {
        double u;
        do {
            u = uniform();
        } while (u <= 0.0);
        return -mean * std::log(u);
    }

    // Knuth's method; adequate for the per-step means this project uses.
    // Runs in O(mean) via a running sum of exponentials.
    int poisson(double mean) {
        if (mean <= 0.0) return 0;
        int k = 0;
        double acc = 0.0;
        for (;;) {
            acc += exponential(1.0);
            if (acc >= mean) return k;
            ++k;
        }
    }

    double normal() {
        // Box-Muller, one value per call (second value discarded to keep
        // the stream position a simple function of call count)
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    double lognormal(double mu, double sigma) {
        return std::exp(mu + sigma * normal());
    }

    // triangular on [lo, hi] with the given mode
    double triangular(double lo, double mode, double hi) {
        if (hi <= lo) return lo;
        double u = uniform();
        double fc = (mode - lo) / (hi - lo);
        if (u < fc) return lo + std::sqrt(u * (hi - lo) * (mode - lo));
        return hi - std::sqrt((1.0 - u) * (hi - lo) * (hi - mode));
    }

private:
    std::uint64_t state_;
};

}  // namespace meshwave
