#include "hitting/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/beta.hpp>

#include "hitting/graph_io.hpp"
#include "hitting/philox.hpp"

namespace hitting {

namespace {

/// Cumulative incident weights per vertex, for inversion sampling.
class StepSampler {
 public:
  explicit StepSampler(const WeightedGraph& g) : next_(g.vertex_count()), cumulative_(g.vertex_count()) {
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      double total = 0.0;
      for (const Arc& a : g.neighbors(x)) {
        total += a.weight;
        next_[x].push_back(a.to);
        cumulative_[x].push_back(total);
      }
    }
  }

  bool can_move(Vertex x) const { return !next_[x].empty(); }

  Vertex step(Vertex x, PhiloxStream& rng) const {
    const auto& cum = cumulative_[x];
    const double u = rng.uniform() * cum.back();
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    return next_[x][static_cast<std::size_t>(it - cum.begin())];
  }

 private:
  std::vector<std::vector<Vertex>> next_;
  std::vector<std::vector<double>> cumulative_;
};

/// Runs body(r) for r in [0, count) on several threads.
template <class Body>
void parallel_replications(std::size_t count, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t r = next++; r < count; r = next++) body(r);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

double normalizer(Estimator e, std::size_t k) {
  const double kk = static_cast<double>(k);
  return e == Estimator::SingleLogRatio ? std::sqrt(kk * std::log(kk)) : kk;
}

void check_record_steps(const SimConfig& config) {
  const auto& s = config.record_steps;
  if (s.empty()) throw std::invalid_argument("escape experiments need record steps");
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument("record steps must be strictly increasing");
  }
  const std::size_t smallest = config.estimator == Estimator::SingleLogRatio ? 2 : 1;
  if (s.front() < smallest) throw std::invalid_argument("record steps start too early for this ratio");
  if (config.estimator == Estimator::HittingTime) throw std::invalid_argument("escape experiments need a ratio");
}

/// distance(r, j) gives |X_k| at steps[j] for replication r.
template <class Walk>
EscapeSummary summarize_escape(const SimConfig& config, Walk walk) {
  check_record_steps(config);
  EscapeSummary out;
  out.statistic = config.estimator;
  out.steps = config.record_steps;
  const std::size_t reps = config.replications, m = out.steps.size();
  out.ratio.assign(reps, std::vector<double>(m, 0.0));

  parallel_replications(reps, config.threads, [&](std::size_t r) {
    PhiloxStream rng(config.seed, r);
    std::vector<std::size_t> dist(m);
    walk(rng, dist);
    for (std::size_t j = 0; j < m; ++j) {
      out.ratio[r][j] = static_cast<double>(dist[j]) / normalizer(config.estimator, out.steps[j]);
    }
  });

  std::vector<double> running(reps, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double sum = 0.0, sum_max = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
      running[r] = std::max(running[r], out.ratio[r][j]);
      sum += out.ratio[r][j];
      sum_max += running[r];
    }
    const double n = static_cast<double>(std::max<std::size_t>(reps, 1));
    out.mean_ratio.push_back(sum / n);
    out.mean_running_max.push_back(sum_max / n);
    out.running_max_quantiles.push_back({quantile(running, 0.1), quantile(running, 0.5), quantile(running, 0.9)});
  }
  return out;
}

}  // namespace

std::size_t HittingSamples::censored_count() const {
  return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [](auto& s) { return s.censored; }));
}

double HittingSamples::mean() const {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& s : samples) {
    if (s.censored) continue;
    sum += static_cast<double>(s.steps);
    ++n;
  }
  return n ? sum / static_cast<double>(n) : std::numeric_limits<double>::quiet_NaN();
}

double HittingSamples::standard_error() const {
  const double m = mean();
  double ss = 0.0;
  std::size_t n = 0;
  for (const auto& s : samples) {
    if (s.censored) continue;
    const double d = static_cast<double>(s.steps) - m;
    ss += d * d;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

HittingSamples simulate_hitting(const WeightedGraph& g, const SimConfig& config) {
  const StepSampler sampler(g);
  HittingSamples out;
  out.max_steps = config.max_steps;
  out.samples.assign(config.replications, {config.max_steps, true});
  parallel_replications(config.replications, config.threads, [&](std::size_t r) {
    PhiloxStream rng(config.seed, r);
    Vertex x = g.origin();
    for (std::size_t k = 1; k <= config.max_steps; ++k) {
      x = sampler.step(x, rng);
      if (g.is_target(x)) {
        out.samples[r] = {k, false};
        return;
      }
    }
  });
  return out;
}

ProportionEstimate clopper_pearson(std::size_t successes, std::size_t trials, double confidence) {
  if (successes > trials) throw std::invalid_argument("more successes than trials");
  if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("confidence must lie in (0, 1)");
  ProportionEstimate p;
  p.successes = successes;
  p.trials = trials;
  if (trials == 0) return p;
  const double x = static_cast<double>(successes), n = static_cast<double>(trials);
  const double alpha = 1.0 - confidence;
  p.estimate = x / n;
  namespace bm = boost::math;
  if (successes == 0) {
    p.lower = 0.0;
    p.upper = 1.0 - std::pow(alpha, 1.0 / n);
  } else if (successes == trials) {
    p.lower = std::pow(alpha, 1.0 / n);
    p.upper = 1.0;
  } else {
    p.lower = bm::quantile(bm::beta_distribution<double>(x, n - x + 1.0), alpha / 2.0);
    p.upper = bm::quantile(bm::beta_distribution<double>(x + 1.0, n - x), 1.0 - alpha / 2.0);
  }
  return p;
}

TailEstimate estimate_tail(const WeightedGraph& g, double a, std::size_t n, const SimConfig& config,
                           double confidence) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("tail threshold needs a >= 0");
  const auto threshold = static_cast<std::size_t>(std::floor(a * static_cast<double>(n) + 1.0));
  SimConfig c = config;
  c.max_steps = threshold;
  const auto samples = simulate_hitting(g, c);
  std::size_t hits = 0;
  for (const auto& s : samples.samples) hits += s.censored ? 0 : 1;
  return {threshold, clopper_pearson(hits, samples.samples.size(), confidence)};
}

MeanEstimate estimate_transform(const HittingSamples& samples, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("beta must lie in (0, 1]");
  const std::size_t n = samples.samples.size();
  if (n == 0) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  std::vector<double> v;
  v.reserve(n);
  for (const auto& s : samples.samples) v.push_back(s.censored ? 0.0 : std::pow(beta, static_cast<double>(s.steps)));
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double se = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
  return {mean, se};
}

EscapeSummary escape_ratios(const WeightedGraph& g, const SimConfig& config) {
  check_record_steps(config);
  const std::size_t last = config.record_steps.back();
  const auto& meta = g.metadata();
  if (meta.contains("safe_horizon") && last > meta["safe_horizon"].get<std::size_t>()) {
    throw std::invalid_argument("record step " + std::to_string(last) + " exceeds the safe horizon " +
                                std::to_string(meta["safe_horizon"].get<std::size_t>()) + " of this truncation");
  }
  const StepSampler sampler(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
  std::deque<Vertex> queue{g.origin()};
  dist[g.origin()] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const Arc& a : g.neighbors(x)) {
      if (dist[a.to] == std::numeric_limits<std::size_t>::max()) {
        dist[a.to] = dist[x] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return summarize_escape(config, [&](PhiloxStream& rng, std::vector<std::size_t>& out) {
    Vertex x = g.origin();
    std::size_t k = 0;
    for (std::size_t j = 0; j < config.record_steps.size(); ++j) {
      for (; k < config.record_steps[j]; ++k) x = sampler.step(x, rng);
      out[j] = dist[x];
    }
  });
}

EscapeSummary escape_ratios_biased(double g, const SimConfig& config) {
  if (!(g >= 1.0) || !std::isfinite(g)) throw std::domain_error("biased walk needs g >= 1");
  const double right = g / (1.0 + g);
  return summarize_escape(config, [&](PhiloxStream& rng, std::vector<std::size_t>& out) {
    long long x = 0;
    std::size_t k = 0;
    for (std::size_t j = 0; j < config.record_steps.size(); ++j) {
      for (; k < config.record_steps[j]; ++k) x += rng.uniform() < right ? 1 : -1;
      out[j] = static_cast<std::size_t>(x < 0 ? -x : x);
    }
  });
}

const char* to_string(Estimator e) {
  switch (e) {
    case Estimator::HittingTime:
      return "hitting_time";
    case Estimator::SpeedRatio:
      return "speed_ratio";
    case Estimator::SingleLogRatio:
      return "single_log_ratio";
  }
  return "?";
}

std::string hitting_csv(const HittingSamples& samples) {
  std::string out = "replication,statistic,k_or_T,value,censored\n";
  for (std::size_t r = 0; r < samples.samples.size(); ++r) {
    const auto& s = samples.samples[r];
    out += std::to_string(r) + ",hitting_time," + std::to_string(s.steps) + "," +
           format_double(static_cast<double>(s.steps)) + "," + (s.censored ? "1" : "0") + "\n";
  }
  return out;
}

std::string escape_csv(const EscapeSummary& summary) {
  std::string out = "replication,statistic,k_or_T,value,censored\n";
  const std::string name = to_string(summary.statistic);
  for (std::size_t r = 0; r < summary.ratio.size(); ++r) {
    for (std::size_t j = 0; j < summary.steps.size(); ++j) {
      out += std::to_string(r) + "," + name + "," + std::to_string(summary.steps[j]) + "," +
             format_double(summary.ratio[r][j]) + ",0\n";
    }
  }
  return out;
}

}  // namespace hitting
