#pragma once

// Finite weighted graphs with a marked origin and target set.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hitting {

/// Canonical vertex index (position in the sorted label order).
using Vertex = std::size_t;

/// Invalid graph data: malformed files, negative weights, missing origin.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  Vertex to;
  double weight;
};

/// Orders labels so that integer labels sort numerically and precede
/// all other labels, which sort lexicographically.
bool label_less(std::string_view a, std::string_view b);

/**
 * Symmetric nonnegative edge weights on a finite vertex set, together with
 * an origin o and a nonempty target set z not containing o.
 *
 * Immutable after construction. Vertices are indexed in canonical label
 * order; each adjacency list is sorted by neighbor index and a self-loop
 * appears once in its own list.
 */
class WeightedGraph {
 public:
  std::size_t vertex_count() const { return labels_.size(); }
  /// Number of undirected edges, self-loops included.
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Arc> neighbors(Vertex x) const { return adjacency_.at(x); }
  /// w(x,y); zero when the pair is not an edge.
  double weight(Vertex x, Vertex y) const;

  const std::string& label(Vertex x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Like find() but throws GraphError for an unknown label.
  Vertex index_of(std::string_view label) const;

  Vertex origin() const { return origin_; }
  const std::vector<Vertex>& targets() const { return targets_; }
  bool is_target(Vertex x) const { return is_target_.at(x) != 0; }

  const nlohmann::json& metadata() const { return metadata_; }

  /// True when the support (ignoring self-loops) is a single simple path.
  bool is_path() const;
  /// Vertices in path order starting from the lower-index endpoint; empty
  /// when is_path() is false.
  std::vector<Vertex> path_order() const;

 private:
  friend class GraphBuilder;
  WeightedGraph() = default;

  std::vector<std::string> labels_;
  std::vector<std::vector<Arc>> adjacency_;
  Vertex origin_ = 0;
  std::vector<Vertex> targets_;
  std::vector<char> is_target_;
  std::size_t edge_count_ = 0;
  nlohmann::json metadata_ = nlohmann::json::object();
};

/**
 * Accumulates labelled vertices and edges, then freezes them into a
 * WeightedGraph. Parallel additions of the same pair are summed; zero
 * weights are dropped (the endpoints are still registered).
 */
class GraphBuilder {
 public:
  void add_vertex(const std::string& label);
  void add_edge(const std::string& u, const std::string& v, double w);
  void set_origin(const std::string& label);
  void add_target(const std::string& label);
  void set_metadata(nlohmann::json metadata) { metadata_ = std::move(metadata); }

  /// Throws GraphError when the origin or targets are missing, the origin
  /// is a target, or a non-target vertex has zero weight.
  WeightedGraph build() const;

 private:
  std::map<std::string, std::map<std::string, double>> edges_;
  std::vector<std::string> vertex_order_;
  std::map<std::string, char> known_;
  std::optional<std::string> origin_;
  std::vector<std::string> targets_;
  nlohmann::json metadata_ = nlohmann::json::object();
};

/// w_x, the sum of weights over edges incident to x (self-loop once).
double vertex_weight(const WeightedGraph& g, Vertex x);

/// Sum of vertex weights over a nonempty set.
double set_weight(const WeightedGraph& g, std::span<const Vertex> set);

/// w_z for the graph's own target set.
inline double target_weight(const WeightedGraph& g) { return set_weight(g, g.targets()); }

/// Merges all targets into one vertex (labelled by the first target).
/// Weights into z are summed and edges inside z are dropped.
WeightedGraph contract_targets(const WeightedGraph& g);

/// Graph distance from x to the nearest vertex of `set`; nullopt when
/// unreachable.
std::optional<std::size_t> distance(const WeightedGraph& g, Vertex x, std::span<const Vertex> set);

/// dist(o, z) for the graph's own origin and targets.
inline std::optional<std::size_t> origin_target_distance(const WeightedGraph& g) {
  return distance(g, g.origin(), g.targets());
}

/// Keeps the targets and every vertex reachable from the origin without
/// passing through a target.
WeightedGraph restrict_accessible(const WeightedGraph& g);

/// For each vertex, whether it is reachable from the origin without
/// stepping through a target. Targets themselves are marked false.
std::vector<char> accessible_mask(const WeightedGraph& g);

}  // namespace hitting
