#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "meshwave/d2m.hpp"

namespace meshwave {

struct SubsidyModel {
    double c_node_eur = 10000.0;   // capex per rural node
    int n_nodes = 100;
    double kappa_pts_per_eur = 0.028;  // marginal coverage gain per euro
    double lambda_r_eur_per_pt = 5000.0;  // social value of one RCG point
    double delta_r_pre = 0.64;
    double r_cov_pre_pct = 36.0;
    // RCG(beta) anchors from the sensitivity measurements
    std::vector<std::pair<double, double>> rcg_curve{
        {0.00, 0.0}, {0.05, 15.0}, {0.10, 28.0},
        {0.15, 30.0}, {0.20, 30.5}, {0.25, 30.7}};
};

struct PenetrationModel {
    double p0 = 0.10;
    double gamma_per_year = 0.208;  // doubles under a device mandate
    bool mandate = false;
};

struct PppModel {
    double i_gov_eur = 10e6;
    double m_f = 1.2;  // empirical band 0.8..1.2
};

struct PolicyInputs {
    SubsidyModel subsidy;
    PenetrationModel penetration;
    PppModel ppp;
    std::array<double, 4> theta{0.25, 0.25, 0.25, 0.25};
    BeffCurve beff_curve = BeffCurve::defaults();
    double alpha_s = 0.12;
    double m_f_band_max = 1.2;  // PS normalization for M_f
};

struct CostBenefit {
    double e_gov = 0.0;
    double rcg = 0.0;  // interpolated coverage gain, points
    double seb = 0.0;  // valued at whole-point RCG precision
    double nsb = 0.0;
    double roi = 0.0;  // fraction; NaN-free, throws instead when e_gov = 0
};

// I_f = beta * C_node. (The prose formula I_f = beta*delta_r is
// non-dimensional; the published subsidy table is exactly consistent
// with the per-node reading at C_node = 10000.)
double subsidy_per_node(double beta, double c_node);

// C_node_eff = C_node - I_f; throws when the subsidy exceeds the cost.
double effective_node_cost(double c_node, double i_f);

// Monotone piecewise-linear interpolation through the RCG(beta) anchors.
double rcg_of_beta(const SubsidyModel& model, double beta);

// R_cov_post = R_cov_pre + kappa * I_f, capped at 100.
double coverage_post(double r_cov_pre_pct, double kappa, double i_f);

// delta_r = 1 - C_r / C_req, clamped to [0,1].
double coverage_deficit(double c_r, double c_req);

// delta_post = delta_pre - beta * rcg, clamped to [0,1]. `rcg` is a
// fraction here, matching the only self-consistent published row.
double post_deficit_eq(double delta_pre, double beta, double rcg);

// E_gov = N*I_f; SEB = lambda_r * RCG(beta) with RCG valued at whole
// coverage points (half-to-even); NSB = SEB-E_gov; ROI = NSB/E_gov.
CostBenefit cost_benefit(const SubsidyModel& model, double beta);

// dRCG/dbeta = kappa * delta_r (analytic form).
double rcg_sensitivity(double kappa, double delta_r);

// Central finite difference of rcg_of_beta, for cross-checking.
double rcg_slope_numeric(const SubsidyModel& model, double beta, double h = 1e-4);

// P(t) = p0 * exp((mandate ? 2 : 1) * gamma * t), capped at 1.
double penetration(const PenetrationModel& model, double t_years);

struct PppTotals {
    double i_total = 0.0;
    double i_private = 0.0;
};

// I_total = I_gov * (1 + M_f); private share = I_gov * M_f.
PppTotals ppp_total(const PppModel& model);

// PS = theta1*B_eff + theta2*RCG + theta3*P_D2M + theta4*M_f, all
// components normalized to [0,1] by the caller.
double policy_score(const std::array<double, 4>& theta, double b_eff,
                    double rcg_norm, double p_d2m, double m_f_norm);

struct SweepRow {
    double beta = 0.0;
    double alpha_s = 0.0;
    double rcg = 0.0;
    double e_gov = 0.0;
    double seb = 0.0;
    double nsb = 0.0;
    double roi = 0.0;
    double b_eff = 0.0;
    double ps = 0.0;
    bool nsb_argmax = false;
    bool beff_optimal = false;  // best B_eff gain per unit alpha
};

// Exhaustive grid evaluation over beta x alpha_s in deterministic grid
// order; flags the NSB argmax and the alpha with the best marginal
// B_eff. Throws DomainError on an empty grid.
std::vector<SweepRow> policy_sweep(const PolicyInputs& inputs,
                                   const std::vector<double>& beta_grid,
                                   const std::vector<double>& alpha_grid);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

PolicyInputs load_policy_inputs(const std::string& path);
PolicyInputs policy_inputs_from_json_text(const std::string& text,
                                          const std::string& origin = "<string>");

}  // namespace meshwave
