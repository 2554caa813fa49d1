#include <doctest.h>

#include <cmath>

#include "hitting/exact.hpp"
#include "hitting/generators.hpp"
#include "hitting/montecarlo.hpp"
#include "hitting/philox.hpp"

using namespace hitting;

TEST_CASE("philox known-answer vectors") {
  static_assert(philox4x32_10({0, 0, 0, 0}, {0, 0})[0] == 0x6627e8d5u);
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == PhiloxBlock{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  const std::uint32_t ones = 0xffffffffu;
  CHECK(philox4x32_10({ones, ones, ones, ones}, {ones, ones}) ==
        PhiloxBlock{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
}

TEST_CASE("philox streams are reproducible and independent") {
  PhiloxStream a(9, 1), b(9, 1), c(9, 2);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u32();
    CHECK(x == b.next_u32());
    differs = differs || x != c.next_u32();
  }
  CHECK(differs);
  PhiloxStream u(3, 0);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double v = u.uniform();
    CHECK((v >= 0.0 && v < 1.0));
    sum += v;
    CHECK(u.below(7) < 7);
  }
  CHECK(std::abs(sum / 100000.0 - 0.5) < 0.005);
}

TEST_CASE("simulated mean matches the exact mean") {
  const auto g = unit_path(5);
  SimConfig cfg;
  cfg.seed = 17;
  cfg.replications = 20000;
  const auto s = simulate_hitting(g, cfg);
  CHECK(s.censored_count() == 0);
  CHECK(std::abs(s.mean() - 25.0) < 4.0 * s.standard_error());
  for (const auto& x : s.samples) {
    CHECK(x.steps >= 5);
    CHECK(x.steps % 2 == 1);
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto g = random_graph(5);
  SimConfig cfg;
  cfg.seed = 99;
  cfg.replications = 3000;
  cfg.threads = 1;
  const auto one = hitting_csv(simulate_hitting(g, cfg));
  cfg.threads = 4;
  const auto four = hitting_csv(simulate_hitting(g, cfg));
  CHECK(one == four);
  cfg.seed = 100;
  CHECK(hitting_csv(simulate_hitting(g, cfg)) != one);
}

TEST_CASE("censoring at the step cap") {
  SimConfig cfg;
  cfg.replications = 500;
  cfg.max_steps = 10;
  const auto s = simulate_hitting(unit_path(8), cfg);
  CHECK(s.censored_count() > 0);
  CHECK(s.censored_count() < 500);
  for (const auto& x : s.samples) {
    if (x.censored) CHECK(x.steps == 10);
    else CHECK(x.steps <= 10);
  }
  const auto t = estimate_transform(s, 0.5);
  double expect = 0.0;
  for (const auto& x : s.samples) {
    if (!x.censored) expect += std::pow(0.5, static_cast<double>(x.steps));
  }
  CHECK(t.mean == doctest::Approx(expect / 500.0));
  CHECK_THROWS_AS(estimate_transform(s, 0.0), std::domain_error);
}

TEST_CASE("Clopper-Pearson intervals") {
  const auto mid = clopper_pearson(5, 10);
  CHECK(mid.estimate == 0.5);
  CHECK(mid.lower == doctest::Approx(0.18708602844).epsilon(1e-8));
  CHECK(mid.upper == doctest::Approx(0.81291397156).epsilon(1e-8));
  const auto none = clopper_pearson(0, 10);
  CHECK(none.lower == 0.0);
  CHECK(none.upper == doctest::Approx(1.0 - std::pow(0.05, 0.1)));
  const auto all = clopper_pearson(10, 10);
  CHECK(all.upper == 1.0);
  CHECK(all.lower == doctest::Approx(std::pow(0.05, 0.1)));
  CHECK_THROWS_AS(clopper_pearson(11, 10), std::invalid_argument);
  CHECK_THROWS_AS(clopper_pearson(1, 10, 1.0), std::invalid_argument);
}

TEST_CASE("tail estimate brackets the exact probability") {
  const auto g = unit_path(6);
  SimConfig cfg;
  cfg.seed = 4;
  cfg.replications = 20000;
  const auto est = estimate_tail(g, 2.0, 5, cfg, 0.999);
  CHECK(est.threshold == 11);
  const double exact = hitting_time_pmf(g, 11).cdf(11);
  CHECK(est.proportion.lower <= exact);
  CHECK(exact <= est.proportion.upper);
  CHECK_THROWS_AS(estimate_tail(g, -1.0, 5, cfg), std::invalid_argument);
}

TEST_CASE("escape ratios on a truncated line") {
  const auto g = unit_path(200);
  SimConfig cfg;
  cfg.seed = 8;
  cfg.replications = 50;
  cfg.estimator = Estimator::SpeedRatio;
  cfg.record_steps = {10, 100, 200};
  const auto e = escape_ratios(g, cfg);
  REQUIRE(e.ratio.size() == 50);
  REQUIRE(e.mean_ratio.size() == 3);
  for (const auto& row : e.ratio) {
    for (double r : row) CHECK((r >= 0.0 && r <= 1.0));
  }
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(e.mean_running_max[j] >= e.mean_ratio[j] - 1e-15);
    CHECK(e.running_max_quantiles[j][0] <= e.running_max_quantiles[j][1]);
    CHECK(e.running_max_quantiles[j][1] <= e.running_max_quantiles[j][2]);
  }
  cfg.record_steps = {10, 201};
  CHECK_THROWS_AS(escape_ratios(g, cfg), std::invalid_argument);
  cfg.record_steps = {20, 10};
  CHECK_THROWS_AS(escape_ratios(g, cfg), std::invalid_argument);
  cfg.record_steps = {};
  CHECK_THROWS_AS(escape_ratios(g, cfg), std::invalid_argument);
  cfg.record_steps = {1, 5};
  cfg.estimator = Estimator::SingleLogRatio;
  CHECK_THROWS_AS(escape_ratios(g, cfg), std::invalid_argument);
  cfg.estimator = Estimator::HittingTime;
  cfg.record_steps = {5};
  CHECK_THROWS_AS(escape_ratios(g, cfg), std::invalid_argument);
}

TEST_CASE("biased walk speed approaches its drift") {
  SimConfig cfg;
  cfg.seed = 21;
  cfg.replications = 200;
  cfg.estimator = Estimator::SpeedRatio;
  cfg.record_steps = {1000, 20000};
  const auto e = escape_ratios_biased(3.0, cfg);
  CHECK(std::abs(e.mean_ratio[1] - 0.5) < 0.01);
  CHECK_THROWS_AS(escape_ratios_biased(0.5, cfg), std::domain_error);
}

TEST_CASE("csv output") {
  SimConfig cfg;
  cfg.replications = 2;
  const auto csv = hitting_csv(simulate_hitting(unit_path(2), cfg));
  CHECK(csv.rfind("replication,statistic,k_or_T,value,censored\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  cfg.estimator = Estimator::SingleLogRatio;
  cfg.record_steps = {2, 4};
  const auto ecsv = escape_csv(escape_ratios_biased(1.0, cfg));
  CHECK(std::count(ecsv.begin(), ecsv.end(), '\n') == 5);
  CHECK(std::string(to_string(Estimator::SpeedRatio)) != std::string(to_string(Estimator::SingleLogRatio)));
}
