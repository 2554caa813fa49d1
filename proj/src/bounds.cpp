#include "hitting/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hitting/exact.hpp"
#include "hitting/reference_walk.hpp"

namespace hitting {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kVacuousG = 1.0 + 1e-12;

}  // namespace

double solve_volume_g(std::size_t n, double ratio) {
  if (n < 1) throw std::domain_error("solve_volume_g needs n >= 1");
  if (!(ratio > 0.0)) throw std::domain_error("solve_volume_g needs a positive ratio");
  const double target = std::log(2.0 * ratio);
  const double k = static_cast<double>(n) - 2.0;
  // Increasing in delta = g - 1 for every n >= 1.
  auto f = [&](double delta) { return 2.0 * std::log(delta) + k * std::log1p(delta) - target; };

  double lo = 1e-14;
  if (f(lo) >= 0.0) return 1.0 + lo;
  double hi = std::sqrt(2.0 * ratio) + 1.0;
  if (n >= 3) hi = std::max(hi, explicit_volume_g(n, ratio) - 1.0);
  while (f(hi) < 0.0) hi *= 2.0;

  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * hi; ++iter) {
    const double mid = hi > 4.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 1.0 + 0.5 * (lo + hi);
}

double explicit_volume_g(std::size_t n, double ratio) {
  if (n < 3) throw std::domain_error("explicit_volume_g needs n >= 3");
  if (!(ratio > 0.0)) throw std::domain_error("explicit_volume_g needs a positive ratio");
  const double nn = static_cast<double>(n);
  const double alpha = std::max(nn * nn * ratio, std::numbers::e);
  const double la = std::log(alpha);
  return std::exp((std::log(5.0) + la - 2.0 * std::log(la)) / (nn - 2.0));
}

double resistance_g(const WeightedGraph& g) {
  const auto dist = origin_target_distance(g);
  if (!dist) return kInf;
  if (*dist < 2) throw std::domain_error("resistance_g needs dist(o,z) >= 2");
  const double r = effective_resistance(g);
  if (!std::isfinite(r)) return kInf;
  const double n = static_cast<double>(*dist - 1);
  return std::exp(std::log(target_weight(g) * r) / n);
}

double mean_lower_bound(std::size_t n, double g) {
  const double m = biased_mean_passage(g);
  if (!std::isfinite(m)) return kInf;
  return m * static_cast<double>(n) + 1.0;
}

double tail_upper_bound(std::size_t n, double g, double a) {
  return std::exp(-BiasedWalk(g).rate(a) * static_cast<double>(n));
}

double laplace_upper_bound(std::size_t n, double g, double beta) {
  const double phi = BiasedWalk(g).step_transform(beta);
  return beta * std::pow(phi, static_cast<double>(n));
}

double poly_mean_asymptotic(double n, double p) {
  if (!(n > 1.0)) throw std::domain_error("poly_mean_asymptotic needs n > 1");
  return 2.0 * n * n / ((p + 2.0) * std::log(n));
}

double poly_tail_exponent(double alpha, double p) { return polynomial_tail_exponent(alpha, p); }

std::vector<double> default_a_grid(double g) {
  const double m = biased_mean_passage(g);
  std::vector<double> grid;
  if (!std::isfinite(m)) return grid;
  for (int i = 1; i <= 12; ++i) grid.push_back(std::pow(m, i / 13.0));
  return grid;
}

std::vector<double> default_beta_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  return grid;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::VacuousPass:
      return "vacuous-pass";
    case Verdict::Fail:
      return "fail";
  }
  return "?";
}

std::size_t BoundReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.verdict == Verdict::Fail; }));
}

BoundReport check_hitting_bounds(const WeightedGraph& input, const BoundOptions& options) {
  const WeightedGraph g = restrict_accessible(contract_targets(input));
  BoundReport report;
  const auto dist = origin_target_distance(g);
  report.ratio = target_weight(g) / vertex_weight(g, g.origin());

  if (!dist) {
    report.reachable = false;
    report.expected_T = kInf;
    report.resistance = kInf;
    report.g_a = report.g_prime = report.g_b = kNaN;
    report.mean_bound_a = report.mean_bound_b = kNaN;
    for (const char* kind : {"mean", "tail", "laplace"}) {
      report.checks.push_back({kind, "none", kNaN, kInf, kNaN, kNaN, Verdict::VacuousPass});
    }
    return report;
  }
  if (*dist < 2) throw std::domain_error("bounds are degenerate for dist(o,z) = 1 (n = 0)");

  report.distance = *dist;
  report.n = *dist - 1;
  const std::size_t n = report.n;
  report.resistance = effective_resistance(g);
  report.g_a = solve_volume_g(n, report.ratio);
  report.g_prime = n >= 3 ? explicit_volume_g(n, report.ratio) : kNaN;
  report.g_b = std::exp(std::log(target_weight(g) * report.resistance) / static_cast<double>(n));
  report.mean_bound_a = mean_lower_bound(n, report.g_a);
  report.mean_bound_b = mean_lower_bound(n, report.g_b);

  const double slack = options.relative_slack;
  const auto betas = options.beta_grid.empty() ? default_beta_grid() : options.beta_grid;

  if (n >= 3) {
    const bool ok = report.g_prime >= report.g_a * (1.0 - 1e-12);
    report.checks.push_back({"explicit_g", "volume", kNaN, report.g_a, report.g_prime,
                             report.g_prime / report.g_a - 1.0, ok ? Verdict::Pass : Verdict::Fail});
  }

  report.options.push_back({"volume", report.g_a, biased_mean_passage(report.g_a), report.mean_bound_a,
                            report.g_a <= kVacuousG, {}});
  report.options.push_back({"resistance", report.g_b, biased_mean_passage(report.g_b), report.mean_bound_b,
                            report.g_b <= kVacuousG, {}});

  // One pmf long enough for the largest a n + 1 of either option.
  double longest = 0.0;
  for (const auto& opt : report.options) {
    if (!opt.vacuous) longest = std::max(longest, opt.mean_passage * static_cast<double>(n) + 2.0);
  }
  const auto stats = hitting_time_pmf(g, static_cast<std::size_t>(std::ceil(longest)));
  report.expected_T = stats.expected_T;
  std::vector<double> survival;
  for (double beta : betas) survival.push_back(survival_transform(g, beta));

  for (auto& opt : report.options) {
    const auto grid = options.a_grid.empty() ? default_a_grid(opt.g) : options.a_grid;
    if (opt.vacuous) {
      report.checks.push_back({"mean", opt.name, kNaN, report.expected_T, kInf, kNaN, Verdict::VacuousPass});
      for (double a : grid) {
        opt.ld_curve.emplace_back(a, 0.0);
        report.checks.push_back({"tail", opt.name, a, kNaN, 0.0, kNaN, Verdict::VacuousPass});
      }
      continue;
    }

    {
      const double et = report.expected_T;
      const bool ok = et >= opt.mean_bound * (1.0 - slack);
      report.checks.push_back(
          {"mean", opt.name, kNaN, et, opt.mean_bound, et / opt.mean_bound - 1.0, ok ? Verdict::Pass : Verdict::Fail});
    }

    for (double a : grid) {
      if (!(a >= 1.0) || a >= opt.mean_passage) continue;
      const double bound = tail_upper_bound(n, opt.g, a);
      opt.ld_curve.emplace_back(a, bound);
      const auto k = static_cast<std::size_t>(std::floor(a * static_cast<double>(n) + 1.0 + 1e-12));
      const double exact = stats.cdf(k);
      const bool ok = exact <= bound * (1.0 + slack);
      const double margin = bound > 0.0 ? 1.0 - exact / bound : (exact == 0.0 ? 0.0 : -kInf);
      report.checks.push_back({"tail", opt.name, a, exact, bound, margin, ok ? Verdict::Pass : Verdict::Fail});
    }

    for (std::size_t i = 0; i < betas.size(); ++i) {
      const double bound = laplace_upper_bound(n, opt.g, betas[i]);
      const bool ok = survival[i] <= bound + options.laplace_slack;
      report.checks.push_back(
          {"laplace", opt.name, betas[i], survival[i], bound, bound - survival[i], ok ? Verdict::Pass : Verdict::Fail});
    }
  }
  return report;
}

}  // namespace hitting
