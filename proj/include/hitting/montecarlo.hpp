#pragma once

// Trajectory simulation. Replication r draws from its own Philox stream
// keyed by (seed, r), so results do not depend on thread count or order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hitting/graph.hpp"

namespace hitting {

enum class Estimator { HittingTime, SpeedRatio, SingleLogRatio };

struct SimConfig {
  std::uint64_t seed = 0;
  std::size_t replications = 1000;
  std::size_t max_steps = 1'000'000;
  /// Step indices at which |X_k| is recorded (escape experiments).
  std::vector<std::size_t> record_steps;
  Estimator estimator = Estimator::HittingTime;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct HittingSample {
  std::size_t steps;  // T, or max_steps when censored
  bool censored;
};

struct HittingSamples {
  std::size_t max_steps = 0;
  std::vector<HittingSample> samples;  // indexed by replication

  std::size_t censored_count() const;
  /// Mean and standard error over uncensored samples.
  double mean() const;
  double standard_error() const;
};

/// Walks from o with K until z is hit or max_steps pass.
HittingSamples simulate_hitting(const WeightedGraph& g, const SimConfig& config);

struct ProportionEstimate {
  std::size_t successes = 0;
  std::size_t trials = 0;
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 1.0;
};

/// Exact binomial (Clopper-Pearson) interval. With no successes (or no
/// failures) the interval is one-sided at the full level.
ProportionEstimate clopper_pearson(std::size_t successes, std::size_t trials, double confidence = 0.95);

struct TailEstimate {
  std::size_t threshold;  // floor(a n + 1)
  ProportionEstimate proportion;
};

/// P(T <= a n + 1) from config.replications walks of at most a n + 1 steps.
/// Walks still running at the threshold count as failures.
TailEstimate estimate_tail(const WeightedGraph& g, double a, std::size_t n, const SimConfig& config,
                           double confidence = 0.95);

struct MeanEstimate {
  double mean;
  double standard_error;
};

/// E beta^T from samples; censored walks contribute 0.
MeanEstimate estimate_transform(const HittingSamples& samples, double beta);

struct EscapeSummary {
  Estimator statistic = Estimator::SpeedRatio;
  std::vector<std::size_t> steps;
  /// ratio[r][j]: replication r at steps[j].
  std::vector<std::vector<double>> ratio;
  /// Per recorded step: mean of the ratio, and mean and 10/50/90%
  /// quantiles of its running maximum.
  std::vector<double> mean_ratio;
  std::vector<double> mean_running_max;
  std::vector<std::array<double, 3>> running_max_quantiles;
};

/// Records |X_k| / k (SpeedRatio) or |X_k| / sqrt(k log k) (SingleLogRatio)
/// with |x| the graph distance from o; targets do not stop the walk.
/// Throws std::invalid_argument when a recorded step exceeds the graph's
/// safe_horizon metadata or the step list is empty or unsorted.
EscapeSummary escape_ratios(const WeightedGraph& g, const SimConfig& config);

/// The same experiment for the biased walk on all of Z with odds 1:g.
EscapeSummary escape_ratios_biased(double g, const SimConfig& config);

const char* to_string(Estimator e);

/// Columns: replication,statistic,k_or_T,value,censored.
std::string hitting_csv(const HittingSamples& samples);
std::string escape_csv(const EscapeSummary& summary);

}  // namespace hitting
