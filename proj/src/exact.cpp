#include "hitting/exact.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "killed_system.hpp"

namespace hitting {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_beta(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("beta must lie in (0, 1]");
}

std::vector<double> unit_vector(std::size_t n, Vertex x) {
  std::vector<double> e(n, 0.0);
  e[x] = 1.0;
  return e;
}

/// w(x, z) for every vertex, z the whole target set.
std::vector<double> weight_into_targets(const WeightedGraph& g) {
  std::vector<double> out(g.vertex_count(), 0.0);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.is_target(x)) continue;
    for (const Arc& a : g.neighbors(x)) {
      if (g.is_target(a.to)) out[x] += a.weight;
    }
  }
  return out;
}

}  // namespace

double Kernel::operator()(Vertex x, Vertex y) const {
  for (const Transition& t : rows.at(x)) {
    if (t.to == y) return t.probability;
  }
  return 0.0;
}

Eigen::MatrixXd Kernel::dense() const {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (const Transition& t : rows[x]) m(x, t.to) = t.probability;
  }
  return m;
}

Kernel transition_kernel(const WeightedGraph& g) {
  Kernel k;
  k.rows.resize(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const double wx = vertex_weight(g, x);
    if (!(wx > 0.0)) throw GraphError("vertex '" + g.label(x) + "' has zero weight");
    for (const Arc& a : g.neighbors(x)) k.rows[x].push_back({a.to, a.weight / wx});
  }
  return k;
}

Kernel killed_kernel(const WeightedGraph& g) {
  Kernel k;
  k.rows.resize(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.is_target(x)) continue;
    const double wx = vertex_weight(g, x);
    if (!(wx > 0.0)) throw GraphError("vertex '" + g.label(x) + "' has zero weight");
    for (const Arc& a : g.neighbors(x)) k.rows[x].push_back({a.to, a.weight / wx});
  }
  return k;
}

Eigen::MatrixXd green_kernel(const WeightedGraph& g, double beta) {
  check_beta(beta);
  const std::size_t n = g.vertex_count();
  if (n > detail::KilledSystem::kDenseLimit) {
    throw std::length_error("dense Green kernel is limited to 2000 vertices; use origin_green_row");
  }
  detail::KilledSystem sys(g, beta);
  Eigen::MatrixXd green = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

  // minv(., x) = M^-1 e_x for live x.
  Eigen::MatrixXd minv = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Vertex x = 0; x < n; ++x) {
    if (!sys.is_live(x)) continue;
    auto col = sys.solve(unit_vector(n, x));
    for (Vertex y = 0; y < n; ++y) minv(y, x) = col[y];
  }
  for (Vertex x = 0; x < n; ++x) {
    if (g.is_target(x)) {
      green(x, x) = 1.0;
      continue;
    }
    if (!sys.is_live(x)) continue;
    for (Vertex y = 0; y < n; ++y) {
      if (g.is_target(y)) {
        double s = 0.0;
        for (const Arc& a : g.neighbors(y)) {
          if (!g.is_target(a.to)) s += minv(x, a.to) * a.weight;
        }
        green(x, y) = beta * s;
      } else if (sys.is_live(y)) {
        green(x, y) = minv(x, y) * vertex_weight(g, y);
      }
    }
  }

  // Dead components (beta = 1 only): a recurrent class never absorbed.
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (g.is_target(s) || sys.is_live(s) || seen[s]) continue;
    std::vector<Vertex> component;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      component.push_back(u);
      for (const Arc& a : g.neighbors(u)) {
        if (!g.is_target(a.to) && !seen[a.to]) {
          seen[a.to] = 1;
          queue.push_back(a.to);
        }
      }
    }
    for (Vertex u : component) {
      for (Vertex v : component) green(u, v) = kInf;
    }
  }
  return green;
}

std::vector<double> origin_green_row(const WeightedGraph& g, double beta) {
  check_beta(beta);
  const std::size_t n = g.vertex_count();
  detail::KilledSystem sys(g, beta);
  const Vertex o = g.origin();
  std::vector<double> row(n, 0.0);
  if (!sys.is_live(o)) {
    const auto reach = accessible_mask(g);
    for (Vertex x = 0; x < n; ++x) {
      if (reach[x]) row[x] = kInf;
    }
    return row;
  }
  const auto u = sys.solve(unit_vector(n, o));
  for (Vertex x = 0; x < n; ++x) {
    if (!g.is_target(x)) {
      row[x] = u[x] * vertex_weight(g, x);
      continue;
    }
    double s = 0.0;
    for (const Arc& a : g.neighbors(x)) {
      if (!g.is_target(a.to)) s += u[a.to] * a.weight;
    }
    row[x] = beta * s;
  }
  return row;
}

double expected_hitting_time(const WeightedGraph& g) { return hitting_time_moments(g).mean; }

HittingMoments hitting_time_moments(const WeightedGraph& g) {
  detail::KilledSystem sys(g, 1.0);
  const Vertex o = g.origin();
  if (!sys.is_live(o)) return {kInf, kInf};
  const std::size_t n = g.vertex_count();
  std::vector<double> rhs(n, 0.0);
  for (Vertex x = 0; x < n; ++x) {
    if (!g.is_target(x)) rhs[x] = vertex_weight(g, x);
  }
  const auto h = sys.solve(rhs);
  // E T^2 solves (I - K_z) m2 = 2h - 1.
  for (Vertex x = 0; x < n; ++x) {
    if (!g.is_target(x)) rhs[x] = vertex_weight(g, x) * (2.0 * h[x] - 1.0);
  }
  const auto m2 = sys.solve(rhs);
  return {h[o], std::max(0.0, m2[o] - h[o] * h[o])};
}

WalkParameters walk_parameters(const WeightedGraph& g, double beta) {
  check_beta(beta);
  detail::KilledSystem sys(g, beta);
  const Vertex o = g.origin();
  const double ratio = target_weight(g) / vertex_weight(g, o);
  WalkParameters p;
  p.beta = beta;
  if (!sys.is_live(o)) {
    p.S = 0.0;
    p.R = kInf;
    p.Gamma = kInf;
    return p;
  }
  const std::size_t n = g.vertex_count();
  auto into_z = weight_into_targets(g);
  for (double& v : into_z) v *= beta;
  p.S = sys.solve(into_z)[o];
  p.R = sys.solve(unit_vector(n, o))[o] * vertex_weight(g, o);
  p.Gamma = p.R * ratio;
  return p;
}

double survival_transform(const WeightedGraph& g, double beta) {
  check_beta(beta);
  detail::KilledSystem sys(g, beta);
  if (!sys.is_live(g.origin())) return 0.0;
  auto rhs = weight_into_targets(g);
  for (double& v : rhs) v *= beta;
  return sys.solve(rhs)[g.origin()];
}

double origin_visits(const WeightedGraph& g, double beta) {
  check_beta(beta);
  detail::KilledSystem sys(g, beta);
  const Vertex o = g.origin();
  if (!sys.is_live(o)) return kInf;
  return sys.solve(unit_vector(g.vertex_count(), o))[o] * vertex_weight(g, o);
}

double gamma_parameter(const WeightedGraph& g, double beta) {
  return origin_visits(g, beta) * target_weight(g) / vertex_weight(g, g.origin());
}

double effective_resistance(const WeightedGraph& g) {
  detail::KilledSystem sys(g, 1.0);
  const Vertex o = g.origin();
  if (!sys.is_live(o)) return kInf;
  return sys.solve(unit_vector(g.vertex_count(), o))[o];
}

double HittingStats::cdf(std::size_t k) const {
  double total = 0.0;
  const std::size_t last = std::min(k + 1, pmf.size());
  for (std::size_t i = 0; i < last; ++i) total += pmf[i];
  return total;
}

HittingStats hitting_time_pmf(const WeightedGraph& g, std::size_t horizon) {
  const Kernel kz = killed_kernel(g);
  const std::size_t n = g.vertex_count();
  HittingStats stats;
  stats.expected_T = expected_hitting_time(g);
  stats.pmf.assign(horizon + 1, 0.0);

  std::vector<double> mass(n, 0.0), next(n, 0.0);
  mass[g.origin()] = 1.0;
  for (std::size_t k = 1; k <= horizon; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    bool any = false;
    for (Vertex x = 0; x < n; ++x) {
      const double m = mass[x];
      if (m == 0.0) continue;
      any = true;
      for (const Transition& t : kz.rows[x]) next[t.to] += m * t.probability;
    }
    if (!any) break;
    double absorbed = 0.0;
    for (Vertex t : g.targets()) {
      absorbed += next[t];
      next[t] = 0.0;
    }
    stats.pmf[k] = absorbed;
    mass.swap(next);
  }
  double remaining = 0.0;
  for (double m : mass) remaining += m;
  stats.survival_mass = remaining;
  return stats;
}

HittingStats hitting_stats(const WeightedGraph& g, std::size_t horizon, const std::vector<double>& betas) {
  auto stats = hitting_time_pmf(g, horizon);
  for (double beta : betas) stats.transform_samples.emplace_back(beta, survival_transform(g, beta));
  return stats;
}

std::size_t default_pmf_horizon(const WeightedGraph& g, double expected_T) {
  constexpr double kCap = 1e7;
  const double n = static_cast<double>(g.vertex_count());
  if (!std::isfinite(expected_T)) return static_cast<std::size_t>(kCap);
  const double h = std::min(kCap, std::max(16.0 * expected_T, 4.0 * n * n));
  return static_cast<std::size_t>(std::ceil(h));
}

}  // namespace hitting
