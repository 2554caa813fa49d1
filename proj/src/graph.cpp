#include "hitting/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>

namespace hitting {

namespace {

std::optional<long long> as_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  auto ia = as_integer(a);
  auto ib = as_integer(b);
  if (ia && ib) {
    if (*ia != *ib) return *ia < *ib;
    return a < b;  // "01" vs "1"
  }
  if (ia) return true;
  if (ib) return false;
  return a < b;
}

double WeightedGraph::weight(Vertex x, Vertex y) const {
  const auto& row = adjacency_.at(x);
  auto it = std::lower_bound(row.begin(), row.end(), y,
                             [](const Arc& a, Vertex v) { return a.to < v; });
  if (it != row.end() && it->to == y) return it->weight;
  return 0.0;
}

std::optional<Vertex> WeightedGraph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& a, std::string_view b) { return label_less(a, b); });
  if (it != labels_.end() && *it == label) return static_cast<Vertex>(it - labels_.begin());
  return std::nullopt;
}

Vertex WeightedGraph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) throw GraphError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

bool WeightedGraph::is_path() const {
  const std::size_t n = vertex_count();
  if (n == 0) return false;
  if (n == 1) return true;
  std::size_t simple_edges = 0;
  std::size_t endpoints = 0;
  for (Vertex x = 0; x < n; ++x) {
    std::size_t degree = 0;
    for (const Arc& a : adjacency_[x]) {
      if (a.to != x) ++degree;
    }
    if (degree == 0 || degree > 2) return false;
    if (degree == 1) ++endpoints;
    simple_edges += degree;
  }
  // A connected graph with n-1 edges and max degree 2 is a path.
  if (simple_edges / 2 != n - 1 || endpoints != 2) return false;
  return path_order().size() == n;
}

std::vector<Vertex> WeightedGraph::path_order() const {
  const std::size_t n = vertex_count();
  if (n == 1) return {0};
  Vertex start = n;
  for (Vertex x = 0; x < n && start == n; ++x) {
    std::size_t degree = 0;
    for (const Arc& a : adjacency_[x]) {
      if (a.to != x) ++degree;
    }
    if (degree == 1) start = x;
  }
  if (start == n) return {};
  std::vector<Vertex> order{start};
  Vertex prev = n;
  Vertex cur = start;
  while (order.size() < n) {
    Vertex next = n;
    for (const Arc& a : adjacency_[cur]) {
      if (a.to != cur && a.to != prev) {
        next = a.to;
        break;
      }
    }
    if (next == n) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order.size() != n) return {};
  return order;
}

void GraphBuilder::add_vertex(const std::string& label) {
  if (known_.emplace(label, 1).second) vertex_order_.push_back(label);
}

void GraphBuilder::add_edge(const std::string& u, const std::string& v, double w) {
  if (!std::isfinite(w) || w < 0.0) {
    throw GraphError("edge (" + u + ", " + v + ") has invalid weight " + std::to_string(w));
  }
  add_vertex(u);
  add_vertex(v);
  if (w == 0.0) return;
  const auto& [a, b] = label_less(v, u) ? std::pair(v, u) : std::pair(u, v);
  edges_[a][b] += w;
}

void GraphBuilder::set_origin(const std::string& label) {
  add_vertex(label);
  origin_ = label;
}

void GraphBuilder::add_target(const std::string& label) {
  add_vertex(label);
  if (std::find(targets_.begin(), targets_.end(), label) == targets_.end()) targets_.push_back(label);
}

WeightedGraph GraphBuilder::build() const {
  if (!origin_) throw GraphError("graph has no origin");
  if (targets_.empty()) throw GraphError("graph has no targets");
  if (std::find(targets_.begin(), targets_.end(), *origin_) != targets_.end()) {
    throw GraphError("origin '" + *origin_ + "' is also a target");
  }

  WeightedGraph g;
  g.labels_ = vertex_order_;
  std::sort(g.labels_.begin(), g.labels_.end(),
            [](const std::string& a, const std::string& b) { return label_less(a, b); });
  const std::size_t n = g.labels_.size();
  g.adjacency_.assign(n, {});
  auto index = [&](const std::string& label) { return *g.find(label); };

  for (const auto& [u, row] : edges_) {
    const Vertex iu = index(u);
    for (const auto& [v, w] : row) {
      const Vertex iv = index(v);
      g.adjacency_[iu].push_back({iv, w});
      if (iv != iu) g.adjacency_[iv].push_back({iu, w});
      ++g.edge_count_;
    }
  }
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }

  g.origin_ = index(*origin_);
  g.is_target_.assign(n, 0);
  for (const auto& t : targets_) {
    g.targets_.push_back(index(t));
    g.is_target_[g.targets_.back()] = 1;
  }
  std::sort(g.targets_.begin(), g.targets_.end());

  for (Vertex x = 0; x < n; ++x) {
    if (!g.is_target_[x] && vertex_weight(g, x) <= 0.0) {
      throw GraphError("vertex '" + g.labels_[x] + "' has no incident weight");
    }
  }
  g.metadata_ = metadata_.is_null() ? nlohmann::json::object() : metadata_;
  return g;
}

double vertex_weight(const WeightedGraph& g, Vertex x) {
  if (x >= g.vertex_count()) throw GraphError("vertex index out of range");
  double total = 0.0;
  for (const Arc& a : g.neighbors(x)) total += a.weight;
  return total;
}

double set_weight(const WeightedGraph& g, std::span<const Vertex> set) {
  if (set.empty()) throw std::invalid_argument("set_weight of an empty vertex set");
  double total = 0.0;
  for (Vertex x : set) total += vertex_weight(g, x);
  return total;
}

WeightedGraph contract_targets(const WeightedGraph& g) {
  if (g.targets().size() == 1) return g;
  const std::string& merged = g.label(g.targets().front());
  GraphBuilder b;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (!g.is_target(x)) b.add_vertex(g.label(x));
  }
  b.add_vertex(merged);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.is_target(x)) continue;
    for (const Arc& a : g.neighbors(x)) {
      if (g.is_target(a.to)) {
        b.add_edge(g.label(x), merged, a.weight);
      } else if (a.to >= x) {
        b.add_edge(g.label(x), g.label(a.to), a.weight);
      }
    }
  }
  b.set_origin(g.label(g.origin()));
  b.add_target(merged);
  b.set_metadata(g.metadata());
  return b.build();
}

std::optional<std::size_t> distance(const WeightedGraph& g, Vertex x, std::span<const Vertex> set) {
  const std::size_t n = g.vertex_count();
  if (x >= n) throw GraphError("vertex index out of range");
  std::vector<char> goal(n, 0);
  for (Vertex s : set) goal.at(s) = 1;
  if (goal[x]) return 0;
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, kUnseen);
  std::deque<Vertex> queue{x};
  dist[x] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const Arc& a : g.neighbors(u)) {
      if (dist[a.to] != kUnseen) continue;
      dist[a.to] = dist[u] + 1;
      if (goal[a.to]) return dist[a.to];
      queue.push_back(a.to);
    }
  }
  return std::nullopt;
}

std::vector<char> accessible_mask(const WeightedGraph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<Vertex> queue{g.origin()};
  seen[g.origin()] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const Arc& a : g.neighbors(u)) {
      if (seen[a.to] || g.is_target(a.to)) continue;
      seen[a.to] = 1;
      queue.push_back(a.to);
    }
  }
  return seen;
}

WeightedGraph restrict_accessible(const WeightedGraph& g) {
  const auto keep = accessible_mask(g);
  bool all_kept = true;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (!keep[x] && !g.is_target(x)) all_kept = false;
  }
  if (all_kept) return g;

  auto kept = [&](Vertex x) { return keep[x] || g.is_target(x); };
  GraphBuilder b;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (kept(x)) b.add_vertex(g.label(x));
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (!kept(x)) continue;
    for (const Arc& a : g.neighbors(x)) {
      if (kept(a.to) && a.to >= x) b.add_edge(g.label(x), g.label(a.to), a.weight);
    }
  }
  b.set_origin(g.label(g.origin()));
  for (Vertex t : g.targets()) b.add_target(g.label(t));
  b.set_metadata(g.metadata());
  return b.build();
}

}  // namespace hitting
