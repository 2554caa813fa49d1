#pragma once

// Biased simple random walk on the integers with left:right odds 1:g, the
// comparison walk for the hitting-time bounds. T'_{0n} is its passage time
// from 0 to n.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hitting {

class BiasedWalk {
 public:
  /// Throws std::domain_error unless g >= 1.
  explicit BiasedWalk(double g);

  double g() const { return g_; }
  double right_probability() const { return g_ / (1.0 + g_); }
  double left_probability() const { return 1.0 / (1.0 + g_); }

  /// m_g = E T'_{01} = (g+1)/(g-1); +infinity for g = 1.
  double mean_passage() const;

  /// Large deviation rate I_g(a) of T'_{0n}/n for 1 <= a <= m_g, from
  ///   e^{-I} = g/(a+1) (g/(a^2-1))^{(a-1)/2} (2a/(g+1))^a,
  /// with the removable singularity at a = 1 filled in.
  double rate(double a) const;

  /// E beta^{T'_{01}} = (g+1 - sqrt((g+1)^2 - 4 beta^2 g)) / (2 beta).
  double step_transform(double beta) const;

  /// P(T'_{0n} = k) for k = 0..horizon by dynamic programming over
  /// positions; mass that has not arrived by the horizon is dropped.
  std::vector<double> passage_pmf(std::size_t n, std::size_t horizon) const;

  /// P[X_t >= n] for the walk started at 0, summed in log space.
  double position_tail(std::size_t t, std::size_t n) const;

 private:
  double g_;
};

/// m_g for any g > 0; +infinity when g <= 1.
double biased_mean_passage(double g);

/// (alpha(p+2) - 2)^2 / (8 alpha), the polynomial-growth tail exponent.
/// Requires 0 < alpha <= 2/(p+2).
double polynomial_tail_exponent(double alpha, double p);

}  // namespace hitting
