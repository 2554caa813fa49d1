#include "hitting/report.hpp"

#include <cmath>
#include <cstdio>

namespace hitting {

nlohmann::json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "infinity" : "-infinity";
  return x;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json out;
  out["reachable"] = r.reachable;
  out["distance"] = r.reachable ? nlohmann::json(r.distance) : nlohmann::json("infinity");
  out["n"] = r.n;
  out["ratio_wz_wo"] = json_number(r.ratio);
  out["resistance"] = json_number(r.resistance);
  out["expected_T"] = json_number(r.expected_T);
  out["g_volume"] = json_number(r.g_a);
  out["g_volume_explicit"] = json_number(r.g_prime);
  out["g_resistance"] = json_number(r.g_b);
  out["mean_bound_volume"] = json_number(r.mean_bound_a);
  out["mean_bound_resistance"] = json_number(r.mean_bound_b);

  auto options = nlohmann::json::array();
  for (const auto& o : r.options) {
    auto curve = nlohmann::json::array();
    for (const auto& [a, b] : o.ld_curve) curve.push_back({json_number(a), json_number(b)});
    options.push_back({{"name", o.name},
                       {"g", json_number(o.g)},
                       {"mean_passage", json_number(o.mean_passage)},
                       {"mean_bound", json_number(o.mean_bound)},
                       {"vacuous", o.vacuous},
                       {"tail_curve", curve}});
  }
  out["options"] = options;

  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"kind", c.kind},
                      {"g_option", c.g_option},
                      {"parameter", json_number(c.parameter)},
                      {"exact", json_number(c.exact)},
                      {"bound", json_number(c.bound)},
                      {"margin", json_number(c.margin)},
                      {"verdict", to_string(c.verdict)}});
  }
  out["checks"] = checks;
  out["violations"] = r.violations();
  return out;
}

nlohmann::json pmf_summary(const HittingStats& stats) {
  nlohmann::json out;
  double mass = 0.0, mean = 0.0;
  for (std::size_t k = 0; k < stats.pmf.size(); ++k) {
    mass += stats.pmf[k];
    mean += static_cast<double>(k) * stats.pmf[k];
  }
  out["horizon"] = stats.pmf.empty() ? 0 : stats.pmf.size() - 1;
  out["captured_mass"] = json_number(mass);
  out["tail_mass"] = json_number(stats.survival_mass);
  out["truncated_mean"] = json_number(mass > 0.0 ? mean / mass : std::nan(""));
  auto quantiles = nlohmann::json::object();
  for (double q : {0.1, 0.5, 0.9, 0.99}) {
    double cum = 0.0;
    nlohmann::json at = nullptr;
    for (std::size_t k = 0; k < stats.pmf.size(); ++k) {
      cum += stats.pmf[k];
      if (cum >= q) {
        at = k;
        break;
      }
    }
    char key[16];
    std::snprintf(key, sizeof key, "%g", q);
    quantiles[key] = at;
  }
  out["quantiles"] = quantiles;
  return out;
}

nlohmann::json analyze(const WeightedGraph& input, const AnalyzeOptions& options) {
  const WeightedGraph g = restrict_accessible(contract_targets(input));
  nlohmann::json out;
  out["vertices"] = input.vertex_count();
  out["edges"] = input.edge_count();
  out["origin"] = input.label(input.origin());
  auto targets = nlohmann::json::array();
  for (Vertex t : input.targets()) targets.push_back(input.label(t));
  out["targets"] = targets;

  const auto moments = hitting_time_moments(g);
  out["expected_T"] = json_number(moments.mean);
  out["variance_T"] = json_number(moments.variance);
  out["resistance"] = json_number(effective_resistance(g));
  std::size_t horizon = options.horizon ? options.horizon : default_pmf_horizon(g, moments.mean);
  if (!origin_target_distance(g)) horizon = 0;
  out["pmf"] = pmf_summary(hitting_time_pmf(g, horizon));

  const auto betas = options.bounds.beta_grid.empty() ? default_beta_grid() : options.bounds.beta_grid;
  auto params = nlohmann::json::array();
  for (double beta : betas) {
    const auto p = walk_parameters(g, beta);
    params.push_back({{"beta", beta}, {"S", json_number(p.S)}, {"R", json_number(p.R)}, {"Gamma", json_number(p.Gamma)}});
  }
  out["walk_parameters"] = params;
  out["bounds"] = to_json(check_hitting_bounds(g, options.bounds));
  return out;
}

}  // namespace hitting
