#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "meshwave/errors.hpp"
#include "meshwave/policy.hpp"

using namespace meshwave;

TEST_CASE("per-node subsidy is rate times capex") {
    CHECK(subsidy_per_node(0.10, 10000.0) == doctest::Approx(1000.0));
    CHECK(subsidy_per_node(0.20, 10000.0) == doctest::Approx(2000.0));
    CHECK(subsidy_per_node(0.0, 10000.0) == 0.0);
    CHECK_THROWS_AS(subsidy_per_node(-0.1, 10000.0), DomainError);
}

TEST_CASE("effective node cost nets out the subsidy") {
    CHECK(effective_node_cost(10000.0, 1000.0) == doctest::Approx(9000.0));
    CHECK(effective_node_cost(10000.0, 0.0) == 10000.0);
    CHECK(effective_node_cost(10000.0, 10000.0) == 0.0);
    CHECK_THROWS_AS(effective_node_cost(10000.0, 10001.0), DomainError);
}

TEST_CASE("coverage gain curve interpolates through the measurements") {
    SubsidyModel m;
    CHECK(rcg_of_beta(m, 0.10) == doctest::Approx(28.0));
    CHECK(rcg_of_beta(m, 0.0) == 0.0);
    CHECK(rcg_of_beta(m, 0.075) == doctest::Approx(21.5));
    CHECK_THROWS_AS(rcg_of_beta(m, 0.30), DomainError);
    // concavity: successive anchor slopes non-increasing
    for (std::size_t i = 2; i < m.rcg_curve.size(); ++i) {
        auto [x0, y0] = m.rcg_curve[i - 2];
        auto [x1, y1] = m.rcg_curve[i - 1];
        auto [x2, y2] = m.rcg_curve[i];
        CHECK((y1 - y0) / (x1 - x0) >= (y2 - y1) / (x2 - x1) - 1e-12);
    }
}

TEST_CASE("coverage after subsidy") {
    CHECK(coverage_post(36.0, 0.0, 1000.0) == 36.0);
    CHECK(coverage_post(36.0, 0.028, 1000.0) == doctest::Approx(64.0));
    CHECK(coverage_post(95.0, 1.0, 10.0) == 100.0);  // capped
}

TEST_CASE("coverage deficit definition") {
    CHECK(coverage_deficit(100.0, 100.0) == 0.0);
    CHECK(coverage_deficit(36.0, 100.0) == doctest::Approx(0.64));
    CHECK(coverage_deficit(120.0, 100.0) == 0.0);  // clamped
    CHECK_THROWS_AS(coverage_deficit(1.0, 0.0), DomainError);
}

TEST_CASE("post-subsidy deficit equation") {
    CHECK(post_deficit_eq(0.64, 0.0, 0.0) == doctest::Approx(0.64));
    CHECK(post_deficit_eq(0.64, 0.20, 1.0) == doctest::Approx(0.44));
    CHECK(post_deficit_eq(0.1, 0.5, 1.0) == 0.0);  // clamped at zero
}

TEST_CASE("cost-benefit reproduces the published rows exactly") {
    SubsidyModel m;  // defaults: 100 nodes, 10000 per node, 5000 per point
    CostBenefit b10 = cost_benefit(m, 0.10);
    CHECK(b10.e_gov == doctest::Approx(100000.0));
    CHECK(b10.seb == doctest::Approx(140000.0));
    CHECK(b10.nsb == doctest::Approx(40000.0));
    CHECK(b10.roi == doctest::Approx(0.40));

    CostBenefit b20 = cost_benefit(m, 0.20);
    CHECK(b20.e_gov == doctest::Approx(200000.0));
    CHECK(b20.seb == doctest::Approx(150000.0));
    CHECK(b20.nsb == doctest::Approx(-50000.0));
    CHECK(b20.roi == doctest::Approx(-0.25));

    // the low-rate row: expenditure matches the table, but the benefit
    // computed from the gain curve is 75000, not the printed 80000 —
    // a documented source-table inconsistency we do not reproduce
    CostBenefit b05 = cost_benefit(m, 0.05);
    CHECK(b05.e_gov == doctest::Approx(50000.0));
    CHECK(b05.seb == doctest::Approx(75000.0));

    CHECK_THROWS_AS(cost_benefit(m, 0.0), DomainError);  // ROI undefined
}

TEST_CASE("cost-benefit internal identities hold on a grid") {
    SubsidyModel m;
    for (double beta : {0.05, 0.075, 0.10, 0.15, 0.20, 0.25}) {
        CostBenefit cb = cost_benefit(m, beta);
        CHECK(cb.nsb == doctest::Approx(cb.seb - cb.e_gov));
        CHECK(cb.roi * cb.e_gov == doctest::Approx(cb.nsb));
    }
}

TEST_CASE("coverage-gain sensitivity") {
    CHECK(rcg_sensitivity(0.028, 0.0) == 0.0);
    CHECK(rcg_sensitivity(0.028, 0.64) == doctest::Approx(0.028 * 0.64));
    SubsidyModel m;
    // numerical slope on the second segment: (28-15)/0.05 = 260
    CHECK(rcg_slope_numeric(m, 0.075) == doctest::Approx(260.0));
    // slope decreases along the curve
    CHECK(rcg_slope_numeric(m, 0.025) > rcg_slope_numeric(m, 0.075));
    CHECK(rcg_slope_numeric(m, 0.075) > rcg_slope_numeric(m, 0.125));
    CHECK(rcg_slope_numeric(m, 0.125) > rcg_slope_numeric(m, 0.175));
}

TEST_CASE("device penetration forecast") {
    PenetrationModel m;  // p0 = 0.10, gamma = 0.208
    CHECK(penetration(m, 0.0) == doctest::Approx(0.10));
    m.mandate = true;
    CHECK(penetration(m, 5.0) >= 0.80);
    CHECK(penetration(m, 5.0) == doctest::Approx(0.10 * std::exp(2.0 * 0.208 * 5.0)));
    m.mandate = false;
    // without a mandate the five-year level stays below a third
    CHECK(penetration(m, 5.0) == doctest::Approx(0.283).epsilon(0.01));
    // mandate curve strictly above for every positive horizon, capped at 1
    PenetrationModel with = m;
    with.mandate = true;
    for (double t = 0.25; t < 12.0; t += 0.25) {
        double a = penetration(m, t);
        double b = penetration(with, t);
        CHECK(b <= 1.0);
        if (b < 1.0) CHECK(b > a);
        else CHECK(b >= a);
    }
    CHECK(penetration(with, 50.0) == 1.0);
    CHECK_THROWS_AS(penetration(m, -1.0), DomainError);
}

TEST_CASE("public-private totals") {
    PppModel m;  // 10M at multiplier 1.2
    PppTotals t = ppp_total(m);
    CHECK(t.i_total == doctest::Approx(22e6));
    CHECK(t.i_private == doctest::Approx(12e6));
    CHECK(t.i_private == doctest::Approx(m.i_gov_eur * m.m_f));

    m.m_f = 0.8;
    CHECK(ppp_total(m).i_private == doctest::Approx(8e6));
    m.m_f = 1e-12;
    CHECK(ppp_total(m).i_total == doctest::Approx(m.i_gov_eur));
}

TEST_CASE("policy score is a monotone weighted sum") {
    std::array<double, 4> theta{0.25, 0.25, 0.25, 0.25};
    CHECK(policy_score(theta, 0.0, 0.0, 0.0, 0.0) == 0.0);
    CHECK(policy_score(theta, 0.40, 28.0 / 31.0, 0.80, 1.0) ==
          doctest::Approx(0.25 * (0.40 + 28.0 / 31.0 + 0.80 + 1.0)));
    CHECK(policy_score(theta, 0.5, 0.5, 0.5, 0.5) <=
          policy_score(theta, 0.6, 0.5, 0.5, 0.5));
    CHECK_THROWS_AS(policy_score({-0.1, 0.5, 0.3, 0.3}, 1, 1, 1, 1), DomainError);
}

TEST_CASE("sweep flags the benefit argmax and the spectrum knee") {
    PolicyInputs inputs;
    auto rows = policy_sweep(inputs, {0.05, 0.10, 0.20}, {0.08, 0.12, 0.16});
    REQUIRE(rows.size() == 9);
    for (const auto& r : rows) {
        if (r.nsb_argmax) CHECK(r.beta == doctest::Approx(0.10));
        if (r.beff_optimal) CHECK(r.alpha_s == doctest::Approx(0.12));
    }
    int argmax_count = 0;
    for (const auto& r : rows) argmax_count += r.nsb_argmax ? 1 : 0;
    CHECK(argmax_count == 1);

    // B_eff column equals the curve anchors on an anchor grid
    for (const auto& r : rows) {
        if (r.alpha_s == doctest::Approx(0.08)) CHECK(r.b_eff == doctest::Approx(0.25));
        if (r.alpha_s == doctest::Approx(0.12)) CHECK(r.b_eff == doctest::Approx(0.40));
        if (r.alpha_s == doctest::Approx(0.16)) CHECK(r.b_eff == doctest::Approx(0.42));
    }

    // singleton grid: that row is the argmax
    auto one = policy_sweep(inputs, {0.10}, {0.12});
    REQUIRE(one.size() == 1);
    CHECK(one[0].nsb_argmax);
    CHECK(one[0].beff_optimal);

    CHECK_THROWS_AS(policy_sweep(inputs, {}, {}), DomainError);
}

TEST_CASE("sweep argmax is invariant to scaling the score weights") {
    PolicyInputs a;
    PolicyInputs b;
    for (auto& w : b.theta) w *= 3.0;
    auto ra = policy_sweep(a, {0.05, 0.10, 0.20}, {0.08, 0.12, 0.16});
    auto rb = policy_sweep(b, {0.05, 0.10, 0.20}, {0.08, 0.12, 0.16});
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i)
        CHECK(ra[i].nsb_argmax == rb[i].nsb_argmax);
}

TEST_CASE("sweep CSV has a header naming every column") {
    PolicyInputs inputs;
    auto rows = policy_sweep(inputs, {0.10}, {0.12});
    std::string csv = sweep_to_csv(rows);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "beta,alpha_s,rcg_pct,e_gov_eur,seb_eur,nsb_eur,roi,b_eff,ps,"
          "nsb_argmax,beff_optimal");
    std::string row;
    CHECK(static_cast<bool>(std::getline(in, row)));
}

TEST_CASE("policy inputs parse from JSON with defaults for omitted blocks") {
    PolicyInputs p = policy_inputs_from_json_text(R"({
      "subsidy": {"c_node_eur": 12000.0, "n_nodes": 50},
      "penetration": {"mandate": true},
      "alpha_s": 0.10
    })");
    CHECK(p.subsidy.c_node_eur == 12000.0);
    CHECK(p.subsidy.n_nodes == 50);
    CHECK(p.subsidy.lambda_r_eur_per_pt == 5000.0);  // default retained
    CHECK(p.penetration.mandate);
    CHECK(p.alpha_s == 0.10);
    CHECK_THROWS_AS(policy_inputs_from_json_text("{nope"), ParseError);
}
