#include <doctest.h>

#include <cmath>

#include "hitting/exact.hpp"
#include "hitting/generators.hpp"
#include "hitting/graph_io.hpp"
#include "oracles.hpp"

using namespace hitting;

namespace {

std::vector<double> path_weights(const WeightedGraph& g) {
  const auto order = g.path_order();
  std::vector<double> w;
  for (std::size_t i = 1; i < order.size(); ++i) w.push_back(g.weight(order[i - 1], order[i]));
  return w;
}

}  // namespace

TEST_CASE("unit path") {
  const auto g = unit_path(4);
  CHECK(g.vertex_count() == 5);
  CHECK(g.label(g.origin()) == "0");
  CHECK(g.label(g.targets()[0]) == "4");
  CHECK(g.metadata()["generator"] == "unit_path");
  CHECK(g.metadata()["safe_horizon"] == 4);
  CHECK_THROWS_AS(unit_path(0), std::invalid_argument);
}

TEST_CASE("biased line weights grow geometrically") {
  const auto g = biased_line(5, 3.0, 2);
  CHECK(g.vertex_count() == 8);
  CHECK(g.weight(g.index_of("-2"), g.index_of("-1")) == doctest::Approx(1.0 / 9.0));
  CHECK(g.weight(g.index_of("0"), g.index_of("1")) == 1.0);
  CHECK(g.weight(g.index_of("4"), g.index_of("5")) == 81.0);
  CHECK(g.metadata()["safe_horizon"] == 2);
  CHECK(g.metadata()["truncation_escape_bound"].get<double>() == doctest::Approx(1.0 / 9.0));
  CHECK_THROWS_AS(biased_line(2000, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(biased_line(5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(biased_line(0, 2.0), std::invalid_argument);
}

TEST_CASE("fast path weights and mean hitting time") {
  const auto g = fast_path(7, 3.0);
  const auto w = path_weights(g);
  REQUIRE(w.size() == 7);
  const std::vector<double> expect{1.0, 2.0, 6.0, 18.0, 54.0, 162.0, 4.0 * 81.0};
  for (std::size_t i = 0; i < 7; ++i) CHECK(w[i] == doctest::Approx(expect[i]));
  CHECK(oracle::path_mean(w) == doctest::Approx(fast_path_mean(7, 2.0)).epsilon(1e-12));
  CHECK(g.metadata()["expected_T"].get<double>() == doctest::Approx(fast_path_mean(7, 2.0)));
  CHECK_THROWS_AS(fast_path(3, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(fast_path(6, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fast_path_excess(6, -0.5), std::invalid_argument);
}

TEST_CASE("fast path closed form agrees with the exact engine near g = 1") {
  for (std::size_t n : {4u, 10u, 100u, 1000u}) {
    for (double d : {1e-3, 0.01, 0.5, 4.0}) {
      if (static_cast<double>(n) * std::log1p(d) > 600.0) {
        CHECK_THROWS_AS(fast_path_excess(n, d), std::invalid_argument);
        continue;
      }
      const auto g = fast_path_excess(n, d);
      const double et = expected_hitting_time(g);
      CHECK(std::abs(et / fast_path_mean(n, d) - 1.0) < 1e-9);
      CHECK(std::abs(oracle::path_mean(path_weights(g)) / et - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("polynomial-growth g solves its defining equation in log space") {
  for (double n : {10.0, 1e3, 1e6}) {
    for (double p : {0.0, 1.0, 2.0}) {
      const double big = (p + 2.0) * std::log(n);
      const double lhs = n * std::log1p(polyg_excess(n, p));
      CHECK(lhs == doctest::Approx(big - 2.0 * std::log(big)).epsilon(1e-12));
      CHECK(polyg_g(n, p) == doctest::Approx(1.0 + polyg_excess(n, p)));
    }
  }
  CHECK(polyg_excess(1e3, 0.0) == doctest::Approx(0.0086007020549580288).epsilon(1e-13));
  CHECK_THROWS_AS(polyg_excess(1.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(polyg_excess(10.0, -1.0), std::domain_error);
}

TEST_CASE("recurrent tree line shape") {
  const auto g = recurrent_tree_line(3, {2, 0, 1}, 5);
  // Trees of depth 2 and 1 add 3 + 9 and 3 vertices.
  CHECK(g.vertex_count() == 5 + 12 + 3);
  CHECK(g.label(g.targets()[0]) == "4");
  CHECK(g.find("0:12").has_value());
  CHECK_FALSE(g.find("0:13").has_value());
  CHECK(g.find("2:3").has_value());
  CHECK(vertex_weight(g, g.index_of("0")) == 4.0);
  CHECK(g.metadata()["safe_horizon"] == 4);
  CHECK_THROWS_AS(recurrent_tree_line(1, {1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(recurrent_tree_line(2, {1, 1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(recurrent_tree_line(2, {30}, 3), std::length_error);
  CHECK_THROWS_AS(recurrent_tree_line(2, {5}, 3, 40), std::length_error);
}

TEST_CASE("concatenated fast paths scale each block by the weight before it") {
  const auto g = concatenated_fast({6, 14, 30}, 0.0);
  const auto w = path_weights(g);
  REQUIRE(w.size() == 30);
  double before = 0.0;
  for (std::size_t i = 0; i < 6; ++i) before += w[i];
  CHECK(w[6] == doctest::Approx(before));
  for (std::size_t i = 6; i < 14; ++i) before += w[i];
  CHECK(w[14] == doctest::Approx(before));
  const double d = polyg_excess(8.0, 0.0);
  CHECK(w[8] / w[7] == doctest::Approx(1.0 + d));
  CHECK(g.label(g.targets()[0]) == "30");
  CHECK(std::abs(expected_hitting_time(g) / oracle::path_mean(w) - 1.0) < 1e-12);
  CHECK_THROWS_AS(concatenated_fast({}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(concatenated_fast({6, 8}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(concatenated_fast({6, 5}, 0.0), std::invalid_argument);
}

TEST_CASE("square schedule") {
  CHECK(square_schedule(4, 4) == std::vector<std::size_t>{4, 16, 256, 65536});
  CHECK(square_schedule(5, 1) == std::vector<std::size_t>{5});
  CHECK_THROWS_AS(square_schedule(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(square_schedule(4, 7), std::overflow_error);
}

TEST_CASE("random graphs respect their constraints") {
  RandomGraphOptions opt;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_graph(seed, opt);
    const auto d = oracle::dense(g);
    CHECK(g.vertex_count() <= opt.max_vertices);
    CHECK(g.vertex_count() >= opt.min_distance + 1);
    CHECK(g.targets().size() == 1);
    CHECK(oracle::bfs_distance(d, g.origin()) >= opt.min_distance);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      for (const auto& a : g.neighbors(x)) {
        CHECK(a.weight >= opt.weight_min);
        CHECK(a.weight <= opt.weight_max);
      }
    }
    const auto mask = accessible_mask(g);
    for (Vertex x = 0; x < g.vertex_count(); ++x) CHECK((mask[x] != 0) == !g.is_target(x));
  }
}

TEST_CASE("random graphs are reproducible from the seed") {
  CHECK(serialize_graph(random_graph(42)) == serialize_graph(random_graph(42)));
  CHECK(serialize_graph(random_graph(42)) != serialize_graph(random_graph(43)));
  const auto corpus = random_corpus(42, 3);
  REQUIRE(corpus.size() == 3);
  CHECK(serialize_graph(corpus[1]) == serialize_graph(random_graph(43)));
}

TEST_CASE("random graph options are validated") {
  RandomGraphOptions opt;
  opt.max_vertices = 3;
  opt.min_distance = 3;
  CHECK_THROWS_AS(random_graph(1, opt), std::invalid_argument);
  opt = {};
  opt.weight_min = 0.0;
  CHECK_THROWS_AS(random_graph(1, opt), std::invalid_argument);
}

TEST_CASE("generator dispatch") {
  GeneratorSpec s;
  s.kind = "fast_path";
  s.n = 50;
  s.p = 2.0;
  const auto g = generate(s);
  CHECK(g.metadata()["parameters"]["g"].get<double>() == doctest::Approx(polyg_g(50.0, 2.0)));
  s.g = 2.0;
  CHECK(generate(s).metadata()["parameters"]["g"] == 2.0);
  s = {};
  s.kind = "recurrent_tree_line";
  s.g = 2.5;
  s.depths = {1};
  CHECK_THROWS_AS(generate(s), std::invalid_argument);
  s.g = 2.0;
  CHECK(generate(s).vertex_count() == 4);
  s = {};
  s.kind = "nope";
  CHECK_THROWS_AS(generate(s), std::invalid_argument);
}
