#pragma once

// Named graph families and a seeded random corpus. Every generator records
// its name and parameters in the graph metadata. Finite truncations of
// infinite families also record `safe_horizon`, the number of steps a walk
// from the origin can take before it could notice the truncation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hitting/graph.hpp"

namespace hitting {

/// Path 0..n with unit weights; o = 0, z = n.
WeightedGraph unit_path(std::size_t n);

/// Path 0..n with weight g^{i-1} on edge (i-1, i), extended by `tail`
/// vertices -1..-tail behind the origin that continue the same pattern.
/// o = 0, z = n. Throws std::invalid_argument for g <= 0 or overflowing
/// weights.
WeightedGraph biased_line(std::size_t n, double g, std::size_t tail = 0);

/// Path 0..n with w(e_1) = 1, w(e_i) = (g-1) g^{i-2} for 2 <= i < n and
/// w(e_n) = (g-1)^2 g^{n-3}. Needs n >= 4 and g > 1.
WeightedGraph fast_path(std::size_t n, double g);

/// The same graph parametrized by g - 1, for g close to 1.
WeightedGraph fast_path_excess(std::size_t n, double g_minus_1);

/// 2(n-2)/(g-1) + 2g/(g-1)^2 + n, the mean hitting time of fast_path.
double fast_path_mean(std::size_t n, double g_minus_1);

/// g - 1 for g = (n^{p+2} / log(n^{p+2})^2)^{1/n}, evaluated in log space.
/// Throws std::domain_error unless log(n^{p+2}) > 1.
double polyg_excess(double n, double p);

/// 1 + polyg_excess(n, p).
double polyg_g(double n, double p);

/// Unit-weight path 0..line_length-1 with a complete g-ary tree of depth
/// depths[i] hanging from vertex i. o = 0; z = the far end of the line,
/// which carries no tree. Throws std::length_error above max_vertices.
WeightedGraph recurrent_tree_line(unsigned g, const std::vector<unsigned>& depths, std::size_t line_length,
                                  std::size_t max_vertices = 2'000'000);

/// Fast paths of lengths x_i - x_{i-1} (x_0 = 0) placed end to end, each
/// block tuned to boundary growth n_i^p and scaled by the total edge weight
/// of the blocks before it. o = 0, z = the last cut point.
WeightedGraph concatenated_fast(const std::vector<std::size_t>& cuts, double p);

/// first, first^2, first^4, ... (count terms).
std::vector<std::size_t> square_schedule(std::size_t first, std::size_t count);

struct RandomGraphOptions {
  std::size_t max_vertices = 12;
  double weight_min = 0.1;
  double weight_max = 10.0;
  std::size_t min_distance = 3;
  std::size_t max_attempts = 1000;
};

/// Connected graph with uniform random weights, a random spanning tree plus
/// random chords, and o, z at distance >= min_distance. Every vertex is
/// reachable from o without passing z. Deterministic in the seed.
WeightedGraph random_graph(std::uint64_t seed, const RandomGraphOptions& options = {});

/// random_graph for seeds first_seed .. first_seed + count - 1.
std::vector<WeightedGraph> random_corpus(std::uint64_t first_seed, std::size_t count,
                                         const RandomGraphOptions& options = {});

struct GeneratorSpec {
  std::string kind;  // unit_path, biased_line, fast_path, recurrent_tree_line, concatenated_fast, random
  std::size_t n = 0;
  double g = 0.0;
  double p = 0.0;
  std::size_t tail = 0;
  std::vector<unsigned> depths;
  std::size_t line_length = 0;
  std::vector<std::size_t> cuts;
  std::uint64_t seed = 0;
  RandomGraphOptions random;
  std::size_t max_vertices = 2'000'000;
};

/// Dispatches on spec.kind. fast_path takes g from polyg_g(n, p) when g is
/// zero. Throws std::invalid_argument for an unknown kind.
WeightedGraph generate(const GeneratorSpec& spec);

}  // namespace hitting
