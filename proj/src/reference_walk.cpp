#include "hitting/reference_walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hitting {

BiasedWalk::BiasedWalk(double g) : g_(g) {
  if (!(g >= 1.0) || !std::isfinite(g)) throw std::domain_error("biased walk needs g >= 1");
}

double BiasedWalk::mean_passage() const {
  if (g_ <= 1.0) return std::numeric_limits<double>::infinity();
  return (g_ + 1.0) / (g_ - 1.0);
}

double BiasedWalk::rate(double a) const {
  const double m = mean_passage();
  if (!(a >= 1.0) || a > m * (1.0 + 1e-15)) throw std::domain_error("rate function needs 1 <= a <= m_g");
  a = std::min(a, m);
  // (a-1)/2 * log(g/(a^2-1)) -> 0 as a -> 1.
  const double middle = a > 1.0 ? 0.5 * (a - 1.0) * (std::log(g_) - std::log((a - 1.0) * (a + 1.0))) : 0.0;
  const double log_e = std::log(g_) - std::log(a + 1.0) + middle + a * (std::log(2.0 * a) - std::log(g_ + 1.0));
  return std::max(0.0, -log_e);
}

double BiasedWalk::step_transform(double beta) const {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("beta must lie in (0, 1]");
  const double s = g_ + 1.0;
  const double disc = s * s - 4.0 * beta * beta * g_;
  // Rationalized root: avoids cancellation when beta is small.
  return 2.0 * beta * g_ / (s + std::sqrt(std::max(0.0, disc)));
}

std::vector<double> BiasedWalk::passage_pmf(std::size_t n, std::size_t horizon) const {
  std::vector<double> pmf(horizon + 1, 0.0);
  if (n == 0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (horizon < n) return pmf;
  const double p = right_probability();
  const double q = left_probability();
  // Slot i holds position n - horizon + i; position n absorbs. Positions
  // below n - horizon cannot reach n in time.
  const std::size_t width = horizon;
  std::vector<double> mass(width, 0.0), next(width, 0.0);
  mass[width - n] = 1.0;
  for (std::size_t k = 1; k <= horizon; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    double arrived = 0.0;
    for (std::size_t i = 0; i < width; ++i) {
      const double m = mass[i];
      if (m == 0.0) continue;
      if (i + 1 == width) {
        arrived += p * m;
      } else {
        next[i + 1] += p * m;
      }
      if (i > 0) next[i - 1] += q * m;
    }
    pmf[k] = arrived;
    mass.swap(next);
  }
  return pmf;
}

double BiasedWalk::position_tail(std::size_t t, std::size_t n) const {
  if (n > t) return 0.0;
  const double lp = std::log(right_probability());
  const double lq = std::log(left_probability());
  const double lt = std::lgamma(static_cast<double>(t) + 1.0);
  // X_t = 2K - t with K ~ Binomial(t, g/(1+g)); X_t >= n <=> K >= ceil((t+n)/2).
  const std::size_t k0 = (t + n + 1) / 2;
  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(t - k0 + 1);
  for (std::size_t k = k0; k <= t; ++k) {
    const double kk = static_cast<double>(k);
    const double v = lt - std::lgamma(kk + 1.0) - std::lgamma(static_cast<double>(t - k) + 1.0) + kk * lp +
                     static_cast<double>(t - k) * lq;
    logs.push_back(v);
    peak = std::max(peak, v);
  }
  double sum = 0.0;
  for (double v : logs) sum += std::exp(v - peak);
  return std::min(1.0, std::exp(peak) * sum);
}

double biased_mean_passage(double g) {
  if (!(g > 1.0)) return std::numeric_limits<double>::infinity();
  return (g + 1.0) / (g - 1.0);
}

double polynomial_tail_exponent(double alpha, double p) {
  if (!(p >= 0.0) || !(alpha > 0.0) || alpha > 2.0 / (p + 2.0) * (1.0 + 1e-15)) {
    throw std::domain_error("tail exponent needs p >= 0 and 0 < alpha <= 2/(p+2)");
  }
  const double d = alpha * (p + 2.0) - 2.0;
  return d * d / (8.0 * alpha);
}

}  // namespace hitting
