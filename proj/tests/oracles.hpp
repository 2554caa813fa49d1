#pragma once

// Reference computations that share no code with the library: plain Gauss
// elimination, power series, breadth-first search and closed-form sums.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hitting/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

struct Dense {
  std::size_t n = 0;
  Matrix w;
  std::size_t o = 0;
  std::vector<char> target;

  double weight_of(std::size_t x) const {
    double s = 0.0;
    for (double v : w[x]) s += v;
    return s;
  }
};

inline Dense dense(const hitting::WeightedGraph& g) {
  Dense d;
  d.n = g.vertex_count();
  d.w.assign(d.n, std::vector<double>(d.n, 0.0));
  for (std::size_t x = 0; x < d.n; ++x) {
    for (std::size_t y = 0; y < d.n; ++y) d.w[x][y] = g.weight(x, y);
  }
  d.o = g.origin();
  d.target.assign(d.n, 0);
  for (auto t : g.targets()) d.target[t] = 1;
  return d;
}

inline std::vector<double> gauss_solve(Matrix a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (a[piv][c] == 0.0) throw std::runtime_error("singular");
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

/// First-step analysis: h = 1 + K_z h on non-targets (all must reach z).
inline std::vector<double> hitting_means(const Dense& d) {
  Matrix a(d.n, std::vector<double>(d.n, 0.0));
  std::vector<double> b(d.n, 0.0);
  for (std::size_t x = 0; x < d.n; ++x) {
    a[x][x] = 1.0;
    if (d.target[x]) continue;
    const double wx = d.weight_of(x);
    for (std::size_t y = 0; y < d.n; ++y) {
      if (!d.target[y]) a[x][y] -= d.w[x][y] / wx;
    }
    b[x] = 1.0;
  }
  return gauss_solve(a, b);
}

/// sum_{k <= terms} (beta K_z)^k.
inline Matrix green_series(const Dense& d, double beta, int terms) {
  Matrix k(d.n, std::vector<double>(d.n, 0.0));
  for (std::size_t x = 0; x < d.n; ++x) {
    if (d.target[x]) continue;
    const double wx = d.weight_of(x);
    for (std::size_t y = 0; y < d.n; ++y) k[x][y] = beta * d.w[x][y] / wx;
  }
  Matrix sum(d.n, std::vector<double>(d.n, 0.0)), power(d.n, std::vector<double>(d.n, 0.0));
  for (std::size_t i = 0; i < d.n; ++i) sum[i][i] = power[i][i] = 1.0;
  for (int t = 1; t <= terms; ++t) {
    Matrix next(d.n, std::vector<double>(d.n, 0.0));
    for (std::size_t i = 0; i < d.n; ++i) {
      for (std::size_t m = 0; m < d.n; ++m) {
        if (power[i][m] == 0.0) continue;
        for (std::size_t j = 0; j < d.n; ++j) next[i][j] += power[i][m] * k[m][j];
      }
    }
    power = next;
    for (std::size_t i = 0; i < d.n; ++i) {
      for (std::size_t j = 0; j < d.n; ++j) sum[i][j] += power[i][j];
    }
  }
  return sum;
}

/// P(T = k) for k = 0..horizon by pushing mass, targets absorbing.
inline std::vector<double> hitting_pmf(const Dense& d, std::size_t horizon) {
  std::vector<double> mass(d.n, 0.0), pmf(horizon + 1, 0.0);
  mass[d.o] = 1.0;
  for (std::size_t k = 1; k <= horizon; ++k) {
    std::vector<double> next(d.n, 0.0);
    for (std::size_t x = 0; x < d.n; ++x) {
      if (mass[x] == 0.0 || d.target[x]) continue;
      const double wx = d.weight_of(x);
      for (std::size_t y = 0; y < d.n; ++y) next[y] += mass[x] * d.w[x][y] / wx;
    }
    for (std::size_t y = 0; y < d.n; ++y) {
      if (d.target[y]) {
        pmf[k] += next[y];
        next[y] = 0.0;
      }
    }
    mass = next;
  }
  return pmf;
}

inline std::size_t bfs_distance(const Dense& d, std::size_t from) {
  std::vector<std::size_t> dist(d.n, std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    const auto x = q.front();
    q.pop_front();
    if (d.target[x]) return dist[x];
    for (std::size_t y = 0; y < d.n; ++y) {
      if (d.w[x][y] > 0.0 && dist[y] == std::numeric_limits<std::size_t>::max()) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
  }
  return std::numeric_limits<std::size_t>::max();
}

/// E T from 0 to the end of a path with edge weights w[0..n-1]: crossing
/// edge k takes 1 + 2 (weight behind it) / w_k steps on average.
inline double path_mean(const std::vector<double>& w) {
  double behind = 0.0, total = 0.0;
  for (double wk : w) {
    total += 1.0 + 2.0 * behind / wk;
    behind += wk;
  }
  return total;
}

inline double series_resistance(const std::vector<double>& w) {
  double r = 0.0;
  for (double wk : w) r += 1.0 / wk;
  return r;
}

/// log P(T'_{0n} = n + 2j) = log(n/(n+2j) C(n+2j, j) p^{n+j} q^j), the
/// hitting-time theorem for a walk with right probability p.
inline double log_passage_pmf(double g, long n, long j) {
  const double p = g / (1.0 + g), q = 1.0 / (1.0 + g);
  const double m = static_cast<double>(n + 2 * j);
  return std::log(static_cast<double>(n) / m) + std::lgamma(m + 1.0) - std::lgamma(static_cast<double>(j) + 1.0) -
         std::lgamma(static_cast<double>(n + j) + 1.0) + static_cast<double>(n + j) * std::log(p) +
         static_cast<double>(j) * std::log(q);
}

/// log P(T'_{0n} <= k) by log-sum-exp over the ballot formula.
inline double log_passage_cdf(double g, long n, long k) {
  std::vector<double> terms;
  for (long j = 0; n + 2 * j <= k; ++j) terms.push_back(log_passage_pmf(g, n, j));
  const double peak = *std::max_element(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += std::exp(t - peak);
  return peak + std::log(s);
}

/// E beta^{T'_{01}} by first-step iteration phi = beta (g + phi^2) / (g + 1)
/// from 0, which converges to the smaller root.
inline double step_transform_iter(double g, double beta) {
  double phi = 0.0;
  for (int i = 0; i < 200000; ++i) {
    const double next = beta * (g + phi * phi) / (g + 1.0);
    if (std::abs(next - phi) < 1e-17) return next;
    phi = next;
  }
  return phi;
}

/// inf over lambda >= 0 of e^{lambda a} E e^{-lambda T'_{01}}, by golden
/// section on lambda in [0, 60].
inline double legendre_bound(double g, double a) {
  auto f = [&](double lam) { return lam * a + std::log(step_transform_iter(g, std::exp(-lam))); };
  double lo = 0.0, hi = 60.0;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 200; ++i) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return std::exp(std::min({f(0.0), f1, f2}));
}

}  // namespace oracle
