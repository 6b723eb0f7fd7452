#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "meshwave/errors.hpp"
#include "meshwave/metrics.hpp"
#include "meshwave/rng.hpp"

using namespace meshwave;

TEST_CASE("fairness index identities") {
    CHECK(jain_index({5.0, 5.0, 5.0, 5.0}) == doctest::Approx(1.0));
    CHECK(jain_index({1.0, 2.0, 3.0}) == doctest::Approx(36.0 / 42.0));
    CHECK(jain_index({7.0}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(jain_index({}), DomainError);
    CHECK_THROWS_AS(jain_index({0.0, 0.0}), DomainError);
}

TEST_CASE("fairness is scale-invariant over many random vectors") {
    RngStream rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + rng.uniform_int(20);
        std::vector<double> xs(n), scaled(n);
        double k = rng.uniform(0.001, 1000.0);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = rng.uniform(0.0, 100.0) + 1e-9;
            scaled[i] = k * xs[i];
        }
        CHECK(jain_index(scaled) == doctest::Approx(jain_index(xs)).epsilon(1e-9));
    }
}

TEST_CASE("fairness lower bound 1/n when one user gets everything") {
    for (std::size_t n : {2u, 5u, 50u}) {
        std::vector<double> xs(n, 0.0);
        xs[0] = 10.0;
        CHECK(jain_index(xs) == doctest::Approx(1.0 / static_cast<double>(n)));
    }
}

TEST_CASE("nearest-rank percentile picks an observed sample") {
    CHECK(percentile({10.0}, 0.95) == 10.0);
    std::vector<double> v;
    for (int i = 1; i <= 100; ++i) v.push_back(i);
    CHECK(percentile(v, 0.95) == 95.0);
    CHECK(percentile(v, 1.0) == 100.0);
    CHECK_THROWS_AS(percentile({}, 0.5), DomainError);

    RngStream rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> xs;
        std::size_t n = 1 + rng.uniform_int(30);
        for (std::size_t i = 0; i < n; ++i) xs.push_back(rng.uniform(0.0, 1.0));
        double p = rng.uniform();
        double q = percentile(xs, p);
        bool found = false;
        for (double x : xs)
            if (x == q) found = true;
        CHECK(found);  // always an element of the sample
    }
}

TEST_CASE("loss rate is lost over sent") {
    CHECK(loss_rate(0, 100) == 0.0);
    CHECK(loss_rate(41, 1000) == doctest::Approx(0.041));
    CHECK(loss_rate(18, 1000) == doctest::Approx(0.018));
    CHECK_THROWS_AS(loss_rate(1, 0), DomainError);
    CHECK_THROWS_AS(loss_rate(-1, 10), DomainError);
    CHECK_THROWS_AS(loss_rate(11, 10), DomainError);
}

TEST_CASE("composite quality score arithmetic") {
    std::array<double, 3> eta{0.4, 0.4, 0.2};
    CHECK(cqs(0.0, 200.0, 50.0, 50.0, 1.0, eta) == doctest::Approx(1.0));
    CHECK(cqs(200.0, 200.0, 0.0, 50.0, 0.0, eta) == doctest::Approx(0.0));
    CHECK(cqs(92.0, 200.0, 36.7, 50.0, 0.91, eta) == doctest::Approx(0.6916));
    CHECK_THROWS_AS(cqs(1.0, 0.0, 1.0, 50.0, 0.5, eta), DomainError);
}

TEST_CASE("quality score clamps out-of-band inputs into [0,1]") {
    std::array<double, 3> eta{0.4, 0.4, 0.2};
    // latency beyond the max contributes zero, not a negative term
    CHECK(cqs(400.0, 200.0, 0.0, 50.0, 0.0, eta) == doctest::Approx(0.0));
    // throughput beyond the max contributes the full weight
    CHECK(cqs(0.0, 200.0, 120.0, 50.0, 1.0, eta) == doctest::Approx(1.0));
}

TEST_CASE("quality score is monotone in each component") {
    std::array<double, 3> eta{0.4, 0.4, 0.2};
    CHECK(cqs(80.0, 200.0, 30.0, 50.0, 0.9, eta) >=
          cqs(120.0, 200.0, 30.0, 50.0, 0.9, eta));
    CHECK(cqs(80.0, 200.0, 40.0, 50.0, 0.9, eta) >=
          cqs(80.0, 200.0, 30.0, 50.0, 0.9, eta));
    CHECK(cqs(80.0, 200.0, 30.0, 50.0, 0.95, eta) >=
          cqs(80.0, 200.0, 30.0, 50.0, 0.9, eta));
}

TEST_CASE("composite loss blends congestion, deficit, and recovery") {
    std::array<double, 3> w{0.4, 0.3, 0.3};
    CHECK(gpl(0.0, 0.0, 0.0, w) == 0.0);
    CHECK(gpl(1.12, 0.64, 12.6 / 20.0, w) == doctest::Approx(0.829));
    // linearity in the inputs
    CHECK(gpl(2.24, 1.28, 1.26, w) == doctest::Approx(2.0 * 0.829));
}

TEST_CASE("composite performance index is a convex combination") {
    std::array<double, 3> a{0.4, 0.3, 0.3};
    CHECK(gpi(1.0, 1.0, 1.0, a) == doctest::Approx(1.0));
    CHECK(gpi(0.9, 0.8, 0.8, a) == doctest::Approx(0.84));
    for (double c : {0.0, 0.3, 0.86})
        CHECK(gpi(c, c, c, a) == doctest::Approx(c));
    CHECK_THROWS_AS(gpi(1.0, 1.0, 1.0, std::array<double, 3>{0.4, 0.3, 0.2}),
                    DomainError);
}

TEST_CASE("relative change reproduces the headline reductions") {
    CHECK(relative_change(145.0, 92.0) == doctest::Approx(0.3655).epsilon(0.001));
    // gain form: (new - base) / base = -relative_change
    CHECK(-relative_change(28.4, 36.7) == doctest::Approx(0.2923).epsilon(0.001));
    CHECK(relative_change(12.6, 8.1) == doctest::Approx(0.357).epsilon(0.001));
    CHECK(relative_change(5.0, 5.0) == 0.0);
    CHECK_THROWS_AS(relative_change(0.0, 1.0), DomainError);
}

TEST_CASE("ten-sample interval uses the exact t quantile") {
    CHECK(t_quantile_975(9) == doctest::Approx(2.262).epsilon(0.0005));
    std::vector<double> xs{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    ConfidenceInterval ci = confidence_interval(xs);
    CHECK(ci.n == 10);
    CHECK(ci.mean == doctest::Approx(5.5));
    double s = sample_stddev(xs);
    CHECK(ci.half_width == doctest::Approx(2.262 * s / std::sqrt(10.0)).epsilon(0.001));
}

TEST_CASE("identical samples give a zero-width interval") {
    std::vector<double> xs(10, 42.0);
    ConfidenceInterval ci = confidence_interval(xs);
    CHECK(ci.mean == doctest::Approx(42.0));
    CHECK(ci.half_width == 0.0);
}

TEST_CASE("interval width shrinks as the square root of the sample count") {
    // alternating +-1 around 0: same sample stddev at any even n
    std::vector<double> small, large;
    for (int i = 0; i < 100; ++i) small.push_back(i % 2 == 0 ? 1.0 : -1.0);
    for (int i = 0; i < 400; ++i) large.push_back(i % 2 == 0 ? 1.0 : -1.0);
    ConfidenceInterval a = confidence_interval(small);
    ConfidenceInterval b = confidence_interval(large);
    // quadrupling n should halve the width (t quantiles nearly equal here)
    CHECK(a.half_width / b.half_width == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("too few samples are rejected") {
    CHECK_THROWS_AS(confidence_interval({1.0}), DomainError);
    // two samples is the minimum (df = 1)
    ConfidenceInterval ci = confidence_interval({1.0, 3.0});
    CHECK(ci.n == 2);
    CHECK(ci.mean == doctest::Approx(2.0));
    CHECK(ci.half_width > 0.0);
}
