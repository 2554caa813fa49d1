#include "hitting/generators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hitting/philox.hpp"

namespace hitting {

namespace {

std::string num(long long i) { return std::to_string(i); }

/// Path 0..w.size() with edge (i-1, i) weighted w[i-1].
WeightedGraph weighted_path(const std::vector<double>& w, nlohmann::json metadata) {
  GraphBuilder b;
  for (std::size_t i = 0; i <= w.size(); ++i) b.add_vertex(num(static_cast<long long>(i)));
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || !(w[i] > 0.0)) throw std::invalid_argument("path weight overflow or underflow");
    b.add_edge(num(static_cast<long long>(i)), num(static_cast<long long>(i + 1)), w[i]);
  }
  b.set_origin("0");
  b.add_target(num(static_cast<long long>(w.size())));
  b.set_metadata(std::move(metadata));
  return b.build();
}

std::vector<double> fast_weights(std::size_t n, double delta) {
  // When 1 + delta rounds, exp(k log1p(delta)) is the accurate power.
  const double g = 1.0 + delta;
  const bool exact_base = g - 1.0 == delta;
  const double lg = std::log1p(delta);
  auto power = [&](std::size_t k) {
    return exact_base ? std::pow(g, static_cast<double>(k)) : std::exp(static_cast<double>(k) * lg);
  };
  std::vector<double> w(n);
  w[0] = 1.0;
  for (std::size_t i = 2; i < n; ++i) w[i - 1] = delta * power(i - 2);
  w[n - 1] = delta * delta * power(n - 3);
  return w;
}

}  // namespace

WeightedGraph unit_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("unit_path needs n >= 1");
  return weighted_path(std::vector<double>(n, 1.0),
                       {{"generator", "unit_path"}, {"parameters", {{"n", n}}}, {"safe_horizon", n}});
}

WeightedGraph biased_line(std::size_t n, double g, std::size_t tail) {
  if (n < 1) throw std::invalid_argument("biased_line needs n >= 1");
  if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("biased_line needs g > 0");
  const double lg = std::log(g);
  GraphBuilder b;
  const auto first = -static_cast<long long>(tail);
  for (long long i = first; i <= static_cast<long long>(n); ++i) b.add_vertex(num(i));
  for (long long i = first + 1; i <= static_cast<long long>(n); ++i) {
    const double w = std::pow(g, static_cast<double>(i - 1));
    if (!std::isfinite(w) || !(w > 0.0)) throw std::invalid_argument("biased_line weights overflow; shorten the line");
    b.add_edge(num(i - 1), num(i), w);
  }
  b.set_origin("0");
  b.add_target(num(static_cast<long long>(n)));
  nlohmann::json meta = {{"generator", "biased_line"},
                         {"parameters", {{"n", n}, {"g", g}, {"tail", tail}}},
                         {"safe_horizon", tail}};
  // Chance of ever walking `tail` steps back against the drift.
  if (g > 1.0) meta["truncation_escape_bound"] = std::exp(-static_cast<double>(tail) * lg);
  b.set_metadata(std::move(meta));
  return b.build();
}

WeightedGraph fast_path(std::size_t n, double g) {
  if (!(g > 1.0) || !std::isfinite(g)) throw std::invalid_argument("fast_path needs g > 1");
  return fast_path_excess(n, g - 1.0);
}

WeightedGraph fast_path_excess(std::size_t n, double g_minus_1) {
  if (n < 4) throw std::invalid_argument("fast_path needs n >= 4");
  if (!(g_minus_1 > 0.0) || !std::isfinite(g_minus_1)) throw std::invalid_argument("fast_path needs g > 1");
  return weighted_path(fast_weights(n, g_minus_1),
                       {{"generator", "fast_path"},
                        {"parameters", {{"n", n}, {"g", 1.0 + g_minus_1}, {"g_minus_1", g_minus_1}}},
                        {"expected_T", fast_path_mean(n, g_minus_1)}});
}

double fast_path_mean(std::size_t n, double g_minus_1) {
  const double d = g_minus_1;
  const double nn = static_cast<double>(n);
  return 2.0 * (nn - 2.0) / d + 2.0 * (1.0 + d) / (d * d) + nn;
}

double polyg_excess(double n, double p) {
  if (!(n > 1.0) || !(p >= 0.0)) throw std::domain_error("polyg_g needs n > 1 and p >= 0");
  const double big = (p + 2.0) * std::log(n);
  if (!(big > 1.0)) throw std::domain_error("polyg_g needs log(n^{p+2}) > 1");
  return std::expm1((big - 2.0 * std::log(big)) / n);
}

double polyg_g(double n, double p) { return 1.0 + polyg_excess(n, p); }

WeightedGraph recurrent_tree_line(unsigned g, const std::vector<unsigned>& depths, std::size_t line_length,
                                  std::size_t max_vertices) {
  if (g < 2) throw std::invalid_argument("recurrent_tree_line needs an integer g >= 2");
  if (line_length < 2) throw std::invalid_argument("recurrent_tree_line needs a line of at least 2 vertices");
  if (depths.size() >= line_length) throw std::invalid_argument("the far end of the line carries no tree");

  std::size_t total = line_length;
  for (unsigned d : depths) {
    std::size_t level = 1;
    for (unsigned k = 1; k <= d; ++k) {
      if (level > max_vertices / g) throw std::length_error("recurrent_tree_line exceeds the vertex cap");
      level *= g;
      total += level;
      if (total > max_vertices) throw std::length_error("recurrent_tree_line exceeds the vertex cap");
    }
  }

  GraphBuilder b;
  for (std::size_t i = 0; i < line_length; ++i) b.add_vertex(num(static_cast<long long>(i)));
  for (std::size_t i = 1; i < line_length; ++i) {
    b.add_edge(num(static_cast<long long>(i - 1)), num(static_cast<long long>(i)), 1.0);
  }
  for (std::size_t i = 0; i < depths.size(); ++i) {
    // Tree vertex "i:k" is the k-th vertex in BFS order, root k = 0 being i.
    const std::string prefix = num(static_cast<long long>(i)) + ":";
    auto name = [&](std::size_t k) { return k == 0 ? num(static_cast<long long>(i)) : prefix + std::to_string(k); };
    std::size_t level_start = 0, level_size = 1, next = 1;
    for (unsigned depth = 0; depth < depths[i]; ++depth) {
      for (std::size_t k = level_start; k < level_start + level_size; ++k) {
        for (unsigned c = 0; c < g; ++c) b.add_edge(name(k), name(next++), 1.0);
      }
      level_start += level_size;
      level_size *= g;
    }
  }
  b.set_origin("0");
  b.add_target(num(static_cast<long long>(line_length - 1)));
  b.set_metadata({{"generator", "recurrent_tree_line"},
                  {"parameters", {{"g", g}, {"depths", depths}, {"line_length", line_length}}},
                  {"safe_horizon", line_length - 1}});
  return b.build();
}

WeightedGraph concatenated_fast(const std::vector<std::size_t>& cuts, double p) {
  if (cuts.empty()) throw std::invalid_argument("concatenated_fast needs at least one cut point");
  std::vector<double> w;
  std::size_t previous = 0;
  double mass = 0.0;
  for (std::size_t x : cuts) {
    if (x <= previous || x - previous < 4) throw std::invalid_argument("concatenated_fast blocks need length >= 4");
    const std::size_t n = x - previous;
    const double scale = w.empty() ? 1.0 : mass;
    for (double v : fast_weights(n, polyg_excess(static_cast<double>(n), p))) {
      w.push_back(scale * v);
      mass += scale * v;
    }
    previous = x;
  }
  return weighted_path(w, {{"generator", "concatenated_fast"},
                           {"parameters", {{"cuts", cuts}, {"p", p}}},
                           {"block_scaling", "total edge weight of the preceding blocks"},
                           {"safe_horizon", cuts.back()}});
}

std::vector<std::size_t> square_schedule(std::size_t first, std::size_t count) {
  if (first < 4) throw std::invalid_argument("square_schedule needs first >= 4");
  std::vector<std::size_t> xs;
  std::size_t x = first;
  for (std::size_t i = 0; i < count; ++i) {
    xs.push_back(x);
    if (i + 1 < count) {
      if (x > std::numeric_limits<std::size_t>::max() / x) throw std::overflow_error("square_schedule overflows");
      x *= x;
    }
  }
  return xs;
}

WeightedGraph random_graph(std::uint64_t seed, const RandomGraphOptions& opt) {
  if (opt.max_vertices < opt.min_distance + 1) throw std::invalid_argument("max_vertices too small for min_distance");
  if (!(opt.weight_min > 0.0) || opt.weight_max < opt.weight_min) throw std::invalid_argument("bad weight range");

  for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
    PhiloxStream rng(seed, attempt);
    const std::size_t lo = std::max<std::size_t>(opt.min_distance + 1, 2);
    const std::size_t nv = lo + rng.below(opt.max_vertices - lo + 1);
    auto weight = [&] { return opt.weight_min + (opt.weight_max - opt.weight_min) * rng.uniform(); };

    GraphBuilder b;
    std::vector<std::vector<char>> adj(nv, std::vector<char>(nv, 0));
    for (std::size_t v = 0; v < nv; ++v) b.add_vertex(num(static_cast<long long>(v)));
    for (std::size_t v = 1; v < nv; ++v) {
      const std::size_t u = rng.below(v);
      adj[u][v] = adj[v][u] = 1;
      b.add_edge(num(static_cast<long long>(u)), num(static_cast<long long>(v)), weight());
    }
    const std::size_t chords = rng.below(nv / 2 + 1);
    for (std::size_t c = 0; c < chords; ++c) {
      const std::size_t u = rng.below(nv), v = rng.below(nv);
      if (u == v || adj[u][v]) continue;
      adj[u][v] = adj[v][u] = 1;
      b.add_edge(num(static_cast<long long>(u)), num(static_cast<long long>(v)), weight());
    }

    const std::size_t o = rng.below(nv);
    std::vector<std::size_t> dist(nv, std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> queue{o};
    dist[o] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      for (std::size_t y = 0; y < nv; ++y) {
        if (adj[x][y] && dist[y] == std::numeric_limits<std::size_t>::max()) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    std::vector<std::size_t> far;
    for (std::size_t v = 0; v < nv; ++v) {
      if (dist[v] >= opt.min_distance) far.push_back(v);
    }
    if (far.empty()) continue;
    const std::size_t z = far[rng.below(far.size())];

    b.set_origin(num(static_cast<long long>(o)));
    b.add_target(num(static_cast<long long>(z)));
    b.set_metadata({{"generator", "random"},
                    {"parameters",
                     {{"seed", seed},
                      {"max_vertices", opt.max_vertices},
                      {"weight_min", opt.weight_min},
                      {"weight_max", opt.weight_max},
                      {"min_distance", opt.min_distance}}}});
    WeightedGraph g = b.build();
    const auto reach = accessible_mask(g);
    std::size_t reached = 0;
    for (char r : reach) reached += r ? 1 : 0;
    if (reached + 1 == g.vertex_count()) return g;
  }
  throw std::runtime_error("random_graph: constraints not met after " + std::to_string(opt.max_attempts) +
                           " attempts");
}

std::vector<WeightedGraph> random_corpus(std::uint64_t first_seed, std::size_t count,
                                         const RandomGraphOptions& options) {
  std::vector<WeightedGraph> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) corpus.push_back(random_graph(first_seed + i, options));
  return corpus;
}

WeightedGraph generate(const GeneratorSpec& s) {
  if (s.kind == "unit_path") return unit_path(s.n);
  if (s.kind == "biased_line") return biased_line(s.n, s.g, s.tail);
  if (s.kind == "fast_path") {
    if (s.g != 0.0) return fast_path(s.n, s.g);
    if (s.n < 4) throw std::invalid_argument("fast_path needs n >= 4");
    return fast_path_excess(s.n, polyg_excess(static_cast<double>(s.n), s.p));
  }
  if (s.kind == "recurrent_tree_line") {
    if (!(s.g >= 2.0) || s.g != std::floor(s.g)) throw std::invalid_argument("recurrent_tree_line needs integer g >= 2");
    const std::size_t line = s.line_length != 0 ? s.line_length : s.depths.size() + 1;
    return recurrent_tree_line(static_cast<unsigned>(s.g), s.depths, line, s.max_vertices);
  }
  if (s.kind == "concatenated_fast") return concatenated_fast(s.cuts, s.p);
  if (s.kind == "random") return random_graph(s.seed, s.random);
  throw std::invalid_argument("unknown generator kind '" + s.kind + "'");
}

}  // namespace hitting
