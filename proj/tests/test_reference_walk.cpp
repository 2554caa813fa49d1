#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hitting/exact.hpp"
#include "hitting/generators.hpp"
#include "hitting/reference_walk.hpp"
#include "oracles.hpp"

using namespace hitting;

TEST_CASE("mean passage time") {
  CHECK(BiasedWalk(3.0).mean_passage() == doctest::Approx(2.0));
  CHECK(BiasedWalk(2.0).mean_passage() == doctest::Approx(3.0));
  CHECK(std::isinf(BiasedWalk(1.0).mean_passage()));
  CHECK(std::isinf(biased_mean_passage(0.5)));
  CHECK(biased_mean_passage(5.0) == doctest::Approx(1.5));
  CHECK(BiasedWalk(4.0).right_probability() == doctest::Approx(0.8));
  CHECK(BiasedWalk(4.0).left_probability() == doctest::Approx(0.2));
}

TEST_CASE("rate function vanishes at the mean and matches the straight-run value") {
  for (double g : {1.0001, 1.5, 2.0, 3.0, 10.0, 1e6}) {
    const BiasedWalk w(g);
    CHECK(std::abs(w.rate(w.mean_passage())) < 1e-12);
    CHECK(std::abs(std::exp(-w.rate(1.0)) - g / (g + 1.0)) < 1e-12);
  }
}

TEST_CASE("rate function is convex and decreasing on [1, m_g]") {
  for (double g : {1.2, 2.0, 7.0}) {
    const BiasedWalk w(g);
    const double m = w.mean_passage();
    const int k = 200;
    std::vector<double> v;
    for (int i = 0; i <= k; ++i) v.push_back(w.rate(1.0 + (m - 1.0) * i / k));
    for (int i = 1; i < k; ++i) {
      CHECK(v[i - 1] + v[i + 1] - 2.0 * v[i] >= -1e-13);
      CHECK(v[i] <= v[i - 1] + 1e-15);
    }
  }
}

TEST_CASE("rate function is the Legendre transform of the step transform") {
  for (double g : {1.5, 2.0, 4.0}) {
    const BiasedWalk w(g);
    const double m = w.mean_passage();
    for (double t : {0.05, 0.3, 0.6, 0.9}) {
      const double a = 1.0 + t * (m - 1.0);
      CHECK(std::abs(std::exp(-w.rate(a)) - oracle::legendre_bound(g, a)) < 1e-9);
    }
  }
}

TEST_CASE("step transform solves the first-step equation") {
  for (double g : {1.0, 1.5, 3.0}) {
    const BiasedWalk w(g);
    for (double beta : {0.1, 0.5, 0.9, 0.99}) {
      const double phi = w.step_transform(beta);
      CHECK(std::abs(phi - oracle::step_transform_iter(g, beta)) < 1e-12);
      CHECK(phi < 1.0);
    }
    CHECK(w.step_transform(1.0) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(BiasedWalk(2.0).step_transform(0.0), std::domain_error);
  CHECK_THROWS_AS(BiasedWalk(2.0).step_transform(1.1), std::domain_error);
}

TEST_CASE("passage pmf matches the hitting-time theorem") {
  const BiasedWalk w(1.7);
  const std::size_t n = 9, horizon = 101;
  const auto pmf = w.passage_pmf(n, horizon);
  REQUIRE(pmf.size() == horizon + 1);
  for (std::size_t k = 0; k <= horizon; ++k) {
    if (k < n || (k - n) % 2 == 1) {
      CHECK(pmf[k] == 0.0);
    } else {
      const double expect = std::exp(oracle::log_passage_pmf(1.7, n, static_cast<long>((k - n) / 2)));
      CHECK(std::abs(pmf[k] - expect) <= 1e-13 * std::max(expect, 1e-300) + 1e-300);
    }
  }
}

TEST_CASE("long reflecting tail reproduces the step transform power") {
  // A biased line with a long tail behind the origin behaves like the walk on Z.
  const double g = 2.0;
  const std::size_t n = 6;
  const auto line = biased_line(n, g, 60);
  const BiasedWalk w(g);
  for (double beta : {0.3, 0.7, 0.95}) {
    CHECK(std::abs(survival_transform(line, beta) - std::pow(w.step_transform(beta), n)) < 1e-12);
  }
}

TEST_CASE("position tail equals a direct binomial sum") {
  const BiasedWalk w(1.3);
  const double p = w.right_probability();
  for (std::size_t t : {1u, 10u, 25u, 60u}) {
    for (std::size_t n : {0u, 1u, 5u, 20u, 61u}) {
      double s = 0.0;
      for (std::size_t r = 0; r <= t; ++r) {
        if (2.0 * r - static_cast<double>(t) >= static_cast<double>(n)) {
          s += std::exp(std::lgamma(t + 1.0) - std::lgamma(r + 1.0) - std::lgamma(t - r + 1.0) + r * std::log(p) +
                        (t - r) * std::log1p(-p));
        }
      }
      CHECK(std::abs(w.position_tail(t, n) - s) <= 1e-12 * std::max(s, 1e-300));
    }
  }
}

TEST_CASE("position tail at a frozen high-precision value") {
  const BiasedWalk w(polyg_g(200.0, 0.0));
  CHECK(std::abs(w.position_tail(3774, 200) / 0.0096980629348497663 - 1.0) < 1e-9);
}

TEST_CASE("polynomial tail exponent") {
  CHECK(polynomial_tail_exponent(0.5, 0.0) == doctest::Approx(0.25));
  CHECK(polynomial_tail_exponent(1.0, 0.0) == doctest::Approx(0.0));
  CHECK(polynomial_tail_exponent(0.25, 2.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(polynomial_tail_exponent(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(polynomial_tail_exponent(1.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(polynomial_tail_exponent(0.5, -1.0), std::domain_error);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(BiasedWalk(0.5), std::domain_error);
  CHECK_THROWS_AS(BiasedWalk(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(BiasedWalk(2.0).rate(0.9), std::domain_error);
  CHECK_THROWS_AS(BiasedWalk(2.0).rate(3.5), std::domain_error);
}
