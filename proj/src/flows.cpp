#include "hitting/flows.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "hitting/philox.hpp"

namespace hitting {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

/// f(x,y) < beta f(y,x)-style strictness is tested with this relative slack.
constexpr double kStrictSlack = 1e-12;

/// Entries below this fraction of the largest flow value count as zero.
constexpr double kZeroFraction = 1e-14;

bool two_way(const LossFlow& f, Vertex x, Vertex y) { return f(x, y) > 0.0 && f(y, x) > 0.0; }

}  // namespace

LossFlow::LossFlow(std::size_t vertex_count, Vertex origin, Vertex target, double beta)
    : out_(vertex_count), origin_(origin), target_(target), beta_(beta) {
  if (origin >= vertex_count || target >= vertex_count) throw std::out_of_range("flow endpoint out of range");
  if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("loss flows need 0 < beta < 1");
}

double LossFlow::operator()(Vertex x, Vertex y) const {
  const auto& row = out_.at(x);
  auto it = std::lower_bound(row.begin(), row.end(), y, [](const FlowArc& a, Vertex v) { return a.to < v; });
  return it != row.end() && it->to == y ? it->value : 0.0;
}

void LossFlow::set(Vertex x, Vertex y, double value) {
  if (y >= out_.size()) throw std::out_of_range("vertex index out of range");
  auto& row = out_.at(x);
  auto it = std::lower_bound(row.begin(), row.end(), y, [](const FlowArc& a, Vertex v) { return a.to < v; });
  if (it != row.end() && it->to == y) {
    it->value = value;
  } else {
    row.insert(it, {y, value});
  }
}

double LossFlow::outflow(Vertex x) const {
  double s = 0.0;
  for (const FlowArc& a : out_.at(x)) s += a.value;
  return s;
}

std::vector<double> LossFlow::inflows() const {
  std::vector<double> in(out_.size(), 0.0);
  for (const auto& row : out_) {
    for (const FlowArc& a : row) in[a.to] += a.value;
  }
  return in;
}

double LossFlow::max_abs() const {
  double m = 0.0;
  for (const auto& row : out_) {
    for (const FlowArc& a : row) m = std::max(m, std::abs(a.value));
  }
  return m;
}

LossFlow build_flow(const WeightedGraph& g, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("build_flow needs 0 < beta < 1");
  if (g.targets().size() != 1) throw std::invalid_argument("build_flow needs a single (contracted) target");
  const auto green = origin_green_row(g, beta);
  const Vertex z = g.targets().front();
  LossFlow f(g.vertex_count(), g.origin(), z, beta);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x == z) continue;
    const double scale = green[x] * beta / vertex_weight(g, x);
    for (const Arc& a : g.neighbors(x)) f.set(x, a.to, scale * a.weight);
  }
  return f;
}

double verify_node_law(const LossFlow& f) {
  const auto in = f.inflows();
  double worst = 0.0;
  for (Vertex x = 0; x < f.vertex_count(); ++x) {
    const double source = x == f.origin() ? 1.0 : 0.0;
    const double lhs = x == f.target() ? 0.0 : f.beta() * (in[x] + source);
    worst = std::max(worst, std::abs(lhs - f.outflow(x)));
  }
  return worst;
}

std::vector<Cycle> sample_cycles(const LossFlow& f, std::size_t count, std::uint64_t seed) {
  const std::size_t n = f.vertex_count();
  std::vector<std::vector<Vertex>> support(n);
  std::vector<Vertex> starts;
  for (Vertex x = 0; x < n; ++x) {
    if (x == f.target()) continue;
    for (const FlowArc& a : f.out(x)) {
      if (a.to != f.target() && a.to != x && two_way(f, x, a.to)) support[x].push_back(a.to);
    }
    if (support[x].size() >= 2) starts.push_back(x);
  }
  std::vector<Cycle> cycles;
  if (starts.empty()) return cycles;

  PhiloxStream rng(seed, 0);
  std::vector<std::size_t> position(n, kUnreached);
  const std::size_t attempts = 50 * count + 50;
  for (std::size_t attempt = 0; attempt < attempts && cycles.size() < count; ++attempt) {
    std::vector<Vertex> walk{starts[rng.below(starts.size())]};
    position[walk.back()] = 0;
    Vertex previous = kUnreached;
    for (;;) {
      const Vertex x = walk.back();
      std::vector<Vertex> options;
      for (Vertex y : support[x]) {
        if (y != previous) options.push_back(y);
      }
      if (options.empty()) break;
      const Vertex y = options[rng.below(options.size())];
      if (position[y] != kUnreached) {
        cycles.emplace_back(walk.begin() + static_cast<std::ptrdiff_t>(position[y]), walk.end());
        break;
      }
      position[y] = walk.size();
      walk.push_back(y);
      previous = x;
    }
    for (Vertex v : walk) position[v] = kUnreached;
  }
  return cycles;
}

double verify_reversibility(const LossFlow& f, const std::vector<Cycle>& cycles, double eps) {
  double worst = 0.0;
  for (const Cycle& c : cycles) {
    if (c.empty()) continue;
    double forward = 1.0, backward = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex a = c[i], b = c[(i + 1) % c.size()];
      forward *= f(a, b);
      backward *= f(b, a);
    }
    worst = std::max(worst, std::abs(forward - backward) / std::max({forward, backward, eps}));
  }
  return worst;
}

double theta(const LossFlow& f, Vertex x, Vertex y) {
  const double den = f(y, x);
  if (den == 0.0) throw FlowError("theta undefined: zero flow on the reverse arc");
  return f(x, y) / den;
}

double s_value(const LossFlow& f, Vertex x, Vertex y) {
  const double fxy = f(x, y), fyx = f(y, x), beta = f.beta();
  const double den = fxy - beta * fyx;
  if (den == 0.0) throw FlowError("s undefined: zero denominator");
  return (beta * fxy - fyx) / den;
}

double h_function(double s, double beta) {
  if (!(s >= 0.0 && s < beta)) throw FlowError("h is defined only for 0 <= s < beta");
  return s * (1.0 - s * beta) / (beta - s);
}

WalkParameters flow_parameters(const LossFlow& f) {
  const std::size_t n = f.vertex_count();
  const Vertex o = f.origin(), z = f.target();
  const auto in = f.inflows();
  WalkParameters p;
  p.beta = f.beta();
  p.S = in[z];
  p.R = 1.0 + in[o];

  // Product of theta along a BFS tree of two-way arcs rooted at o.
  std::vector<double> path_theta(n, std::numeric_limits<double>::quiet_NaN());
  path_theta[o] = 1.0;
  std::deque<Vertex> queue{o};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const FlowArc& a : f.out(x)) {
      const Vertex y = a.to;
      if (y == z || !std::isnan(path_theta[y]) || !two_way(f, x, y)) continue;
      path_theta[y] = path_theta[x] * theta(f, x, y);
      queue.push_back(y);
    }
  }
  double gamma = 0.0;
  for (Vertex x = 0; x < n; ++x) {
    const double into_z = f(x, z);
    if (x == z || into_z == 0.0) continue;
    if (std::isnan(path_theta[x])) throw FlowError("no two-way path from the origin to a neighbour of z");
    gamma += path_theta[x] * into_z;
  }
  p.Gamma = gamma / f.beta();
  return p;
}

LossFlow path_flow(const std::vector<Vertex>& path, const std::vector<double>& thetas, double beta,
                   std::size_t vertex_count) {
  if (path.size() < 2) throw std::invalid_argument("path flow needs at least one edge");
  if (thetas.size() != path.size() - 1) throw std::invalid_argument("path flow needs one ratio per edge");
  LossFlow f(vertex_count, path.front(), path.back(), beta);
  double forward = 1.0;
  double previous = 0.0;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double t = thetas[i];
    if (!(t >= 0.0) || !(t < beta)) throw FlowError("infeasible path: edge ratio not below beta");
    forward *= (beta - previous) / (1.0 - beta * t);
    f.set(path[i], path[i + 1], forward);
    f.set(path[i + 1], path[i], t * forward);
    previous = t;
  }
  return f;
}

double FlowDecomposition::total_alpha() const {
  double total = dead_end ? dead_end->alpha : 0.0;
  for (const auto& c : components) total += c.alpha;
  return total;
}

LossFlow FlowDecomposition::reconstruct(std::size_t vertex_count, Vertex origin, Vertex target, double beta) const {
  LossFlow sum(vertex_count, origin, target, beta);
  auto add = [&](double alpha, const LossFlow& part) {
    for (Vertex x = 0; x < part.vertex_count(); ++x) {
      for (const FlowArc& a : part.out(x)) sum.set(x, a.to, sum(x, a.to) + alpha * a.value);
    }
  };
  for (const auto& c : components) add(c.alpha, c.flow);
  if (dead_end) add(dead_end->alpha, dead_end->flow);
  return sum;
}

FlowDecomposition decompose(const LossFlow& f) {
  const std::size_t n = f.vertex_count();
  const Vertex o = f.origin(), z = f.target();
  const double beta = f.beta();
  const double zero = kZeroFraction * f.max_abs();

  LossFlow rest = f;
  std::size_t arcs = 0;
  for (Vertex x = 0; x < n; ++x) arcs += f.out(x).size();

  auto admissible = [&](Vertex x, Vertex y) {
    const double fwd = rest(x, y);
    return fwd > zero && rest(y, x) < beta * fwd * (1.0 - kStrictSlack);
  };

  FlowDecomposition d;
  const std::size_t cap = arcs / 2 + 1;
  for (std::size_t round = 0;; ++round) {
    if (round > cap) throw FlowError("decomposition did not terminate; the flow violates the loss-flow laws");

    // Distances to z along admissible arcs, by BFS on reversed arcs.
    std::vector<std::vector<Vertex>> into(n);
    for (Vertex x = 0; x < n; ++x) {
      if (x == z) continue;
      for (const FlowArc& a : rest.out(x)) {
        if (admissible(x, a.to)) into[a.to].push_back(x);
      }
    }
    std::vector<std::size_t> dist(n, kUnreached);
    dist[z] = 0;
    std::deque<Vertex> queue{z};
    while (!queue.empty()) {
      const Vertex y = queue.front();
      queue.pop_front();
      for (Vertex x : into[y]) {
        if (dist[x] == kUnreached) {
          dist[x] = dist[y] + 1;
          queue.push_back(x);
        }
      }
    }
    if (dist[o] == kUnreached) break;

    std::vector<Vertex> path{o};
    while (path.back() != z) {
      const Vertex x = path.back();
      for (const FlowArc& a : rest.out(x)) {
        if (dist[a.to] + 1 == dist[x] && admissible(x, a.to)) {
          path.push_back(a.to);
          break;
        }
      }
    }

    std::vector<double> thetas;
    for (std::size_t i = 1; i < path.size(); ++i) thetas.push_back(f(path[i], path[i - 1]) / f(path[i - 1], path[i]));
    LossFlow piece = path_flow(path, thetas, beta, n);

    double alpha = std::numeric_limits<double>::infinity();
    std::size_t tight = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
      const double ratio = rest(path[i - 1], path[i]) / piece(path[i - 1], path[i]);
      if (ratio < alpha) {
        alpha = ratio;
        tight = i;
      }
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
      const Vertex a = path[i - 1], b = path[i];
      if (i == tight) {
        rest.set(a, b, 0.0);
        rest.set(b, a, 0.0);
        continue;
      }
      rest.set(a, b, std::max(0.0, rest(a, b) - alpha * piece(a, b)));
      rest.set(b, a, std::max(0.0, rest(b, a) - alpha * piece(b, a)));
    }
    d.components.push_back({alpha, std::move(path), std::move(piece)});
  }

  // What is left never reaches z; its source strength at o is its weight.
  const auto in = rest.inflows();
  const double alpha_o = (rest.outflow(o) - beta * in[o]) / beta;
  if (rest.max_abs() > zero && alpha_o > 1e-12) {
    LossFlow tail(n, o, z, beta);
    for (Vertex x = 0; x < n; ++x) {
      for (const FlowArc& a : rest.out(x)) {
        if (a.value > zero) tail.set(x, a.to, a.value / alpha_o);
      }
    }
    d.dead_end = DeadEndComponent{alpha_o, std::move(tail)};
  }
  return d;
}

double reconstruction_error(const FlowDecomposition& d, const LossFlow& f) {
  const LossFlow sum = d.reconstruct(f.vertex_count(), f.origin(), f.target(), f.beta());
  double worst = 0.0;
  for (Vertex x = 0; x < f.vertex_count(); ++x) {
    for (const FlowArc& a : f.out(x)) worst = std::max(worst, std::abs(sum(x, a.to) - a.value));
    for (const FlowArc& a : sum.out(x)) worst = std::max(worst, std::abs(f(x, a.to) - a.value));
  }
  return worst;
}

double ArrayRepresentation::survival() const {
  double total = 0.0;
  for (const auto& r : rows) {
    double prod = 1.0;
    for (double s : r.s) prod *= s;
    total += r.alpha * prod;
  }
  return beta * total;
}

double ArrayRepresentation::gamma() const {
  double total = 0.0;
  for (const auto& r : rows) {
    double prod = 1.0;
    for (double s : r.s) prod *= h_function(s, beta);
    total += r.alpha * prod;
  }
  return total;
}

double ArrayRepresentation::visits_bound() const {
  double first = 0.0;
  for (const auto& r : rows) first += r.alpha * r.first_s;
  return 2.0 / (1.0 - beta * beta) * (1.0 - beta * first);
}

ArrayRepresentation array_representation(const FlowDecomposition& d, double beta) {
  ArrayRepresentation arr{beta, {}};
  for (const auto& c : d.components) {
    ArrayRow row{c.alpha, c.path.size() - 1, {}, beta};
    for (std::size_t i = 1; i + 1 < c.path.size(); ++i) row.s.push_back(s_value(c.flow, c.path[i - 1], c.path[i]));
    if (!row.s.empty()) row.first_s = row.s.front();
    arr.rows.push_back(std::move(row));
  }
  return arr;
}

nlohmann::json to_json(const LossFlow& f, const WeightedGraph& g) {
  auto arcs = nlohmann::json::array();
  for (Vertex x = 0; x < f.vertex_count(); ++x) {
    for (const FlowArc& a : f.out(x)) {
      if (a.value != 0.0) arcs.push_back({g.label(x), g.label(a.to), a.value});
    }
  }
  return arcs;
}

nlohmann::json to_json(const FlowDecomposition& d, const WeightedGraph& g) {
  nlohmann::json out;
  auto comps = nlohmann::json::array();
  for (const auto& c : d.components) {
    auto path = nlohmann::json::array();
    for (Vertex v : c.path) path.push_back(g.label(v));
    comps.push_back({{"alpha", c.alpha}, {"length", c.path.size() - 1}, {"path", path}, {"flow", to_json(c.flow, g)}});
  }
  out["components"] = comps;
  if (d.dead_end) {
    out["dead_end"] = {{"alpha", d.dead_end->alpha}, {"flow", to_json(d.dead_end->flow, g)}};
  } else {
    out["dead_end"] = nullptr;
  }
  out["total_alpha"] = d.total_alpha();
  return out;
}

}  // namespace hitting
