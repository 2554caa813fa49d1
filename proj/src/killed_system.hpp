#pragma once

// Linear solves against the killed Laplacian M = (D - beta W) restricted to
// non-target vertices. M is symmetric and, for beta < 1 or on components
// that touch z, positive definite. Green kernels and hitting statistics
// reduce to solves with M:  G_beta(x, y) = [M^-1](x, y) * w_y.

#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "hitting/graph.hpp"

namespace hitting::detail {

class KilledSystem {
 public:
  enum class Method { Tridiagonal, Dense, Iterative };

  static constexpr std::size_t kDenseLimit = 2000;
  static constexpr double kIterativeTolerance = 1e-12;

  KilledSystem(const WeightedGraph& g, double beta);
  ~KilledSystem();
  KilledSystem(KilledSystem&&) noexcept;

  /// Solves M u = rhs over live vertices. `rhs` and the result are indexed
  /// by vertex; entries at targets and dead vertices are ignored and
  /// returned as zero.
  std::vector<double> solve(const std::vector<double>& rhs) const;

  /// A non-target vertex is live when its component (in the graph with the
  /// targets removed) has an edge into z, or when beta < 1.
  bool is_live(Vertex x) const { return unknown_of_[x] != kNone; }
  Method method() const { return method_; }
  double beta() const { return beta_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Impl;
  const WeightedGraph* graph_;
  double beta_;
  Method method_;
  std::vector<std::size_t> unknown_of_;
  std::vector<Vertex> vertex_of_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hitting::detail
