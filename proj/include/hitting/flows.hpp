#pragma once

// Loss flows of the beta-lossy walk: f(x,y) is the expected number of x->y
// steps taken before the walk is killed or stopped at z. A loss flow obeys
//
//   beta (f(V,x) + 1(x = o)) 1(x != z) = f(x,V)
//
// and every cycle carries the same flow product in both directions. Such a
// flow splits into flows supported on simple o->z paths plus one flow that
// never reaches z.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "hitting/exact.hpp"
#include "hitting/graph.hpp"

namespace hitting {

class FlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FlowArc {
  Vertex to;
  double value;
};

class LossFlow {
 public:
  LossFlow(std::size_t vertex_count, Vertex origin, Vertex target, double beta);

  std::size_t vertex_count() const { return out_.size(); }
  Vertex origin() const { return origin_; }
  Vertex target() const { return target_; }
  double beta() const { return beta_; }

  /// Arcs out of x with their values, sorted by head.
  const std::vector<FlowArc>& out(Vertex x) const { return out_.at(x); }
  double operator()(Vertex x, Vertex y) const;
  /// Sets f(x,y); zero values stay stored so the support is kept.
  void set(Vertex x, Vertex y, double value);

  double outflow(Vertex x) const;
  std::vector<double> inflows() const;
  /// Largest |f(x,y)| over all arcs.
  double max_abs() const;

 private:
  std::vector<std::vector<FlowArc>> out_;
  Vertex origin_;
  Vertex target_;
  double beta_;
};

/// f(x,y) = G_beta(o,x) beta K_z(x,y). Needs 0 < beta < 1 and a single
/// target (contract first).
LossFlow build_flow(const WeightedGraph& g, double beta);

/// Largest node-law residual over all vertices.
double verify_node_law(const LossFlow& f);

/// A closed walk x_0 -> x_1 -> ... -> x_0 given without repeating x_0.
using Cycle = std::vector<Vertex>;

/// Up to `count` simple cycles found by seeded random walks on the support
/// of f (arcs with flow in both directions), z excluded.
std::vector<Cycle> sample_cycles(const LossFlow& f, std::size_t count, std::uint64_t seed);

/// Largest |f(c) - f(c')| / max(f(c), f(c'), eps) over the cycles, c' the
/// reversed cycle.
double verify_reversibility(const LossFlow& f, const std::vector<Cycle>& cycles, double eps = 1e-300);

/// f(x,y) / f(y,x). Throws FlowError when f(y,x) = 0.
double theta(const LossFlow& f, Vertex x, Vertex y);

/// (beta f(x,y) - f(y,x)) / (f(x,y) - beta f(y,x)).
double s_value(const LossFlow& f, Vertex x, Vertex y);

/// s (1 - s beta) / (beta - s) for 0 <= s < beta.
double h_function(double s, double beta);

/// S = sum_x f(x,z), R = 1 + sum_x f(x,o), Gamma = sum_x theta(pi_x) f(x,z)
/// / beta with pi_x a path from o to x through arcs carrying flow both ways
/// and theta(pi) the product of theta along it.
WalkParameters flow_parameters(const LossFlow& f);

/// The unique loss flow on the simple path (o = path[0], ..., path[l] = z)
/// with backward ratios thetas[i-1] = f(x_i, x_{i-1}) / f(x_{i-1}, x_i).
/// Throws FlowError unless every ratio is below beta.
LossFlow path_flow(const std::vector<Vertex>& path, const std::vector<double>& thetas, double beta,
                   std::size_t vertex_count);

struct PathComponent {
  double alpha;
  std::vector<Vertex> path;
  LossFlow flow;
};

struct DeadEndComponent {
  double alpha;
  LossFlow flow;
};

struct FlowDecomposition {
  std::vector<PathComponent> components;
  std::optional<DeadEndComponent> dead_end;

  double total_alpha() const;
  /// sum_i alpha_i f_i.
  LossFlow reconstruct(std::size_t vertex_count, Vertex origin, Vertex target, double beta) const;
};

/// Peels path flows off f along shortest admissible paths (ties broken by
/// smallest vertex index), each time removing as much as keeps the
/// remainder nonnegative. The remainder becomes the dead-end component.
/// Throws FlowError if peeling does not finish within |arcs|/2 + 1 rounds.
FlowDecomposition decompose(const LossFlow& f);

/// Largest |sum alpha_i f_i - f| over all arcs.
double reconstruction_error(const FlowDecomposition& d, const LossFlow& f);

struct ArrayRow {
  double alpha;
  std::size_t length;
  /// s along the path, excluding the last edge (which has s = beta).
  std::vector<double> s;
  /// s of the first edge, beta when the path is a single edge.
  double first_s;
};

struct ArrayRepresentation {
  double beta;
  std::vector<ArrayRow> rows;

  /// beta sum alpha prod s.
  double survival() const;
  /// sum alpha prod h(s).
  double gamma() const;
  /// 2 / (1 - beta^2) (1 - beta sum alpha first_s).
  double visits_bound() const;
};

ArrayRepresentation array_representation(const FlowDecomposition& d, double beta);

nlohmann::json to_json(const LossFlow& f, const WeightedGraph& g);
nlohmann::json to_json(const FlowDecomposition& d, const WeightedGraph& g);

}  // namespace hitting
