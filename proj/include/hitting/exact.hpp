#pragma once

// Exact hitting-time statistics of the random walk on a weighted graph,
// started at the origin and stopped at the target set.
//
// Everything here reduces to linear solves against (D - beta W) on the
// non-target vertices: a linear-time elimination for path graphs, a dense
// Cholesky factorization up to 2000 vertices, and conjugate gradients with
// relative residual 1e-12 above that. At beta = 1, components that cannot
// reach z make the corresponding quantities infinite rather than raising.

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hitting/graph.hpp"

namespace hitting {

struct Transition {
  Vertex to;
  double probability;
};

/// Row-sparse stochastic (or substochastic) matrix.
struct Kernel {
  std::vector<std::vector<Transition>> rows;

  double operator()(Vertex x, Vertex y) const;
  Eigen::MatrixXd dense() const;
};

/// K(x,y) = w(x,y) / w_x. Throws GraphError for a zero-weight vertex.
Kernel transition_kernel(const WeightedGraph& g);

/// K_z(x,y) = K(x,y) 1(x not in z); target rows are empty.
Kernel killed_kernel(const WeightedGraph& g);

/// Full Green kernel sum_k (beta K_z)^k over all vertices (dense; at most
/// 2000 vertices). Entries that diverge at beta = 1 are +infinity.
Eigen::MatrixXd green_kernel(const WeightedGraph& g, double beta);

/// Row G_beta(o, .) of the Green kernel, for graphs of any size.
std::vector<double> origin_green_row(const WeightedGraph& g, double beta);

/// E T_oz, or +infinity when the walk from o can fail to reach z.
double expected_hitting_time(const WeightedGraph& g);

struct HittingMoments {
  double mean;
  double variance;
};

/// Mean and variance of T_oz from the first two moment equations.
HittingMoments hitting_time_moments(const WeightedGraph& g);

/// S_beta = E beta^T. Throws std::domain_error for beta outside (0, 1].
double survival_transform(const WeightedGraph& g, double beta);

/// R_beta = G_beta(o, o), the expected number of visits to o with the
/// initial visit counted.
double origin_visits(const WeightedGraph& g, double beta);

/// Gamma_beta = R_beta w_z / w_o.
double gamma_parameter(const WeightedGraph& g, double beta);

/// r_oz = G_1(o, o) / w_o; +infinity when z is unreachable.
double effective_resistance(const WeightedGraph& g);

struct WalkParameters {
  double beta = 1.0;
  double S = 0.0;
  double R = 1.0;
  double Gamma = 0.0;
};

/// S, R and Gamma from a single solve.
WalkParameters walk_parameters(const WeightedGraph& g, double beta);

struct HittingStats {
  double expected_T = 0.0;
  /// pmf[k] = P(T = k), k = 0..horizon.
  std::vector<double> pmf;
  /// P(T > horizon).
  double survival_mass = 1.0;
  std::vector<std::pair<double, double>> transform_samples;

  /// P(T <= k), clamped to the stored horizon.
  double cdf(std::size_t k) const;
};

/// Distribution of T up to `horizon` steps by pushing the point mass at o
/// through K_z. Also fills expected_T.
HittingStats hitting_time_pmf(const WeightedGraph& g, std::size_t horizon);

/// hitting_time_pmf plus (beta, S_beta) samples.
HittingStats hitting_stats(const WeightedGraph& g, std::size_t horizon, const std::vector<double>& betas);

/// max(16 E T, 4 |V|^2) capped at 10^7 (the cap alone when E T is infinite).
std::size_t default_pmf_horizon(const WeightedGraph& g, double expected_T);

}  // namespace hitting
