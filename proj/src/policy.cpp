#include "meshwave/policy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "meshwave/errors.hpp"

namespace meshwave {

namespace {

double interpolate(const std::vector<std::pair<double, double>>& anchors, double x,
                   const char* what) {
    if (anchors.empty()) throw DomainError(std::string("empty curve: ") + what);
    if (x < anchors.front().first || x > anchors.back().first)
        throw DomainError(std::string(what) + " outside the anchor range");
    for (std::size_t i = 1; i < anchors.size(); ++i) {
        const auto& [x0, y0] = anchors[i - 1];
        const auto& [x1, y1] = anchors[i];
        if (x <= x1) return y0 + (x - x0) / (x1 - x0) * (y1 - y0);
    }
    return anchors.back().second;
}

}  // namespace

double subsidy_per_node(double beta, double c_node) {
    if (beta < 0.0 || c_node < 0.0) throw DomainError("subsidy inputs must be >= 0");
    return beta * c_node;
}

double effective_node_cost(double c_node, double i_f) {
    if (i_f > c_node) throw DomainError("subsidy exceeds node cost");
    return c_node - i_f;
}

double rcg_of_beta(const SubsidyModel& model, double beta) {
    return interpolate(model.rcg_curve, beta, "beta");
}

double coverage_post(double r_cov_pre_pct, double kappa, double i_f) {
    if (r_cov_pre_pct < 0.0 || kappa < 0.0 || i_f < 0.0)
        throw DomainError("coverage inputs must be >= 0");
    return std::min(100.0, r_cov_pre_pct + kappa * i_f);
}

double coverage_deficit(double c_r, double c_req) {
    if (c_req <= 0.0) throw DomainError("coverage requirement must be > 0");
    return std::clamp(1.0 - c_r / c_req, 0.0, 1.0);
}

double post_deficit_eq(double delta_pre, double beta, double rcg) {
    if (delta_pre < 0.0 || beta < 0.0 || rcg < 0.0)
        throw DomainError("deficit inputs must be >= 0");
    return std::clamp(delta_pre - beta * rcg, 0.0, 1.0);
}

namespace {

// Benefits are valued at whole coverage points (half-to-even at .5), the
// precision the gain estimates carry; interpolated fractions of a point
// are below the model's resolution.
double round_half_even(double x) {
    double floor_v = std::floor(x);
    double frac = x - floor_v;
    if (frac > 0.5) return floor_v + 1.0;
    if (frac < 0.5) return floor_v;
    return std::fmod(floor_v, 2.0) == 0.0 ? floor_v : floor_v + 1.0;
}

}  // namespace

CostBenefit cost_benefit(const SubsidyModel& model, double beta) {
    CostBenefit cb;
    double i_f = subsidy_per_node(beta, model.c_node_eur);
    cb.e_gov = static_cast<double>(model.n_nodes) * i_f;
    cb.rcg = rcg_of_beta(model, beta);
    cb.seb = model.lambda_r_eur_per_pt * round_half_even(cb.rcg);
    cb.nsb = cb.seb - cb.e_gov;
    if (cb.e_gov == 0.0) throw DomainError("ROI undefined for zero expenditure");
    cb.roi = cb.nsb / cb.e_gov;
    return cb;
}

double rcg_sensitivity(double kappa, double delta_r) {
    if (kappa < 0.0 || delta_r < 0.0) throw DomainError("inputs must be >= 0");
    return kappa * delta_r;
}

double rcg_slope_numeric(const SubsidyModel& model, double beta, double h) {
    double lo = std::max(model.rcg_curve.front().first, beta - h);
    double hi = std::min(model.rcg_curve.back().first, beta + h);
    return (rcg_of_beta(model, hi) - rcg_of_beta(model, lo)) / (hi - lo);
}

double penetration(const PenetrationModel& model, double t_years) {
    if (t_years < 0.0) throw DomainError("time must be >= 0");
    if (model.p0 <= 0.0 || model.p0 > 1.0)
        throw DomainError("initial penetration must lie in (0,1]");
    double rate = (model.mandate ? 2.0 : 1.0) * model.gamma_per_year;
    return std::min(1.0, model.p0 * std::exp(rate * t_years));
}

PppTotals ppp_total(const PppModel& model) {
    if (model.m_f <= 0.0) throw DomainError("multiplier must be > 0");
    PppTotals t;
    t.i_total = model.i_gov_eur * (1.0 + model.m_f);
    t.i_private = t.i_total - model.i_gov_eur;
    return t;
}

double policy_score(const std::array<double, 4>& theta, double b_eff,
                    double rcg_norm, double p_d2m, double m_f_norm) {
    for (double w : theta)
        if (w < 0.0) throw DomainError("PS weights must be >= 0");
    return theta[0] * b_eff + theta[1] * rcg_norm + theta[2] * p_d2m +
           theta[3] * m_f_norm;
}

std::vector<SweepRow> policy_sweep(const PolicyInputs& inputs,
                                   const std::vector<double>& beta_grid,
                                   const std::vector<double>& alpha_grid) {
    if (beta_grid.empty() && alpha_grid.empty())
        throw DomainError("empty sweep grid");
    std::vector<double> betas = beta_grid.empty()
                                    ? std::vector<double>{0.10}
                                    : beta_grid;
    std::vector<double> alphas = alpha_grid.empty()
                                     ? std::vector<double>{inputs.alpha_s}
                                     : alpha_grid;

    double rcg_max = 0.0;
    for (const auto& [b, r] : inputs.subsidy.rcg_curve) rcg_max = std::max(rcg_max, r);

    std::vector<SweepRow> rows;
    for (double beta : betas) {
        for (double alpha : alphas) {
            SweepRow row;
            row.beta = beta;
            row.alpha_s = alpha;
            row.rcg = rcg_of_beta(inputs.subsidy, beta);
            if (beta > 0.0) {
                CostBenefit cb = cost_benefit(inputs.subsidy, beta);
                row.e_gov = cb.e_gov;
                row.seb = cb.seb;
                row.nsb = cb.nsb;
                row.roi = cb.roi;
            }
            row.b_eff = beff_lookup(inputs.beff_curve, alpha);
            double p5 = penetration(inputs.penetration, 5.0);
            double m_norm = inputs.m_f_band_max > 0.0
                                ? std::min(1.0, inputs.ppp.m_f / inputs.m_f_band_max)
                                : 0.0;
            row.ps = policy_score(inputs.theta, row.b_eff,
                                  rcg_max > 0.0 ? row.rcg / rcg_max : 0.0, p5, m_norm);
            rows.push_back(row);
        }
    }

    // NSB argmax (first row on ties, grid order)
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].nsb > rows[best].nsb) best = i;
    rows[best].nsb_argmax = true;

    // B_eff optimality: least spectrum within 90% of the grid ceiling
    double beff_ceiling = 0.0;
    for (const auto& r : rows) beff_ceiling = std::max(beff_ceiling, r.b_eff);
    double opt_alpha = -1.0;
    for (const auto& r : rows)
        if (r.b_eff >= 0.9 * beff_ceiling && (opt_alpha < 0.0 || r.alpha_s < opt_alpha))
            opt_alpha = r.alpha_s;
    for (auto& r : rows) r.beff_optimal = (r.alpha_s == opt_alpha);

    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "beta,alpha_s,rcg_pct,e_gov_eur,seb_eur,nsb_eur,roi,b_eff,ps,"
           "nsb_argmax,beff_optimal\n";
    out.setf(std::ios::fixed);
    for (const auto& r : rows) {
        out.precision(4);
        out << r.beta << ',' << r.alpha_s << ',';
        out.precision(2);
        out << r.rcg << ',' << r.e_gov << ',' << r.seb << ',' << r.nsb << ',';
        out.precision(4);
        out << r.roi << ',' << r.b_eff << ',' << r.ps << ','
            << (r.nsb_argmax ? 1 : 0) << ',' << (r.beff_optimal ? 1 : 0) << '\n';
    }
    return out.str();
}

namespace {

using nlohmann::json;

PolicyInputs parse_policy(const json& j) {
    PolicyInputs p;
    if (j.contains("subsidy")) {
        const auto& s = j.at("subsidy");
        p.subsidy.c_node_eur = s.value("c_node_eur", p.subsidy.c_node_eur);
        p.subsidy.n_nodes = s.value("n_nodes", p.subsidy.n_nodes);
        p.subsidy.kappa_pts_per_eur =
            s.value("kappa_pts_per_eur", p.subsidy.kappa_pts_per_eur);
        p.subsidy.lambda_r_eur_per_pt =
            s.value("lambda_r_eur_per_pt", p.subsidy.lambda_r_eur_per_pt);
        p.subsidy.delta_r_pre = s.value("delta_r_pre", p.subsidy.delta_r_pre);
        p.subsidy.r_cov_pre_pct = s.value("r_cov_pre_pct", p.subsidy.r_cov_pre_pct);
        if (s.contains("rcg_curve")) {
            p.subsidy.rcg_curve.clear();
            for (const auto& a : s.at("rcg_curve"))
                p.subsidy.rcg_curve.emplace_back(a.at(0).get<double>(),
                                                 a.at(1).get<double>());
        }
    }
    if (j.contains("penetration")) {
        const auto& s = j.at("penetration");
        p.penetration.p0 = s.value("p0", p.penetration.p0);
        p.penetration.gamma_per_year =
            s.value("gamma_per_year", p.penetration.gamma_per_year);
        p.penetration.mandate = s.value("mandate", p.penetration.mandate);
    }
    if (j.contains("ppp")) {
        const auto& s = j.at("ppp");
        p.ppp.i_gov_eur = s.value("i_gov_eur", p.ppp.i_gov_eur);
        p.ppp.m_f = s.value("m_f", p.ppp.m_f);
    }
    if (j.contains("theta")) {
        const auto& t = j.at("theta");
        for (std::size_t i = 0; i < 4 && i < t.size(); ++i)
            p.theta[i] = t[i].get<double>();
    }
    if (j.contains("beff_curve")) {
        p.beff_curve.anchors.clear();
        for (const auto& a : j.at("beff_curve"))
            p.beff_curve.anchors.emplace_back(a.at(0).get<double>(),
                                              a.at(1).get<double>());
    }
    p.alpha_s = j.value("alpha_s", p.alpha_s);
    p.m_f_band_max = j.value("m_f_band_max", p.m_f_band_max);
    return p;
}

}  // namespace

PolicyInputs policy_inputs_from_json_text(const std::string& text,
                                          const std::string& origin) {
    json j;
    try {
        j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    try {
        return parse_policy(j);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

PolicyInputs load_policy_inputs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open policy inputs file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return policy_inputs_from_json_text(buf.str(), path);
}

}  // namespace meshwave
