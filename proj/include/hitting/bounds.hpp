#pragma once

// Lower bounds on T_oz in terms of dist(o,z) >= n+1 and either w_z/w_o or
// w_z r_oz, and a harness that checks them against exact values.
//
// With g chosen by volume ((g-1)^2 g^{n-2} = 2 w_z/w_o) or by resistance
// (g = (w_z r_oz)^{1/n}):
//
//   E T_oz            >= m_g n + 1
//   P(T_oz <= a n + 1) <= exp(-I_g(a) n)          for 1 <= a < m_g
//   E beta^{T_oz}      <= beta phi_g(beta)^n       for beta in (0, 1]
//
// where m_g, I_g and phi_g belong to the biased walk with odds 1:g.

#include <cstddef>
#include <string>
#include <vector>

#include "hitting/graph.hpp"

namespace hitting {

/// The g > 1 root of (g-1)^2 g^{n-2} = 2 ratio, by bisection. Returns
/// 1 + 1e-14 when the root lies below that.
double solve_volume_g(std::size_t n, double ratio);

/// Explicit upper bound for solve_volume_g: with alpha = max(n^2 ratio, e),
/// (5 alpha / log(alpha)^2)^{1/(n-2)}. Needs n >= 3.
double explicit_volume_g(std::size_t n, double ratio);

/// (w_z r_oz)^{1/n} with n = dist(o,z) - 1. Throws std::domain_error when
/// dist(o,z) < 2; returns +infinity when z is unreachable.
double resistance_g(const WeightedGraph& g);

/// m_g n + 1; +infinity for g <= 1.
double mean_lower_bound(std::size_t n, double g);

/// exp(-I_g(a) n), for 1 <= a <= m_g.
double tail_upper_bound(std::size_t n, double g, double a);

/// beta phi_g(beta)^n = E beta^{T'_{0n} + 1}.
double laplace_upper_bound(std::size_t n, double g, double beta);

/// 2 n^2 / ((p+2) log n), the polynomial-growth mean asymptotic.
double poly_mean_asymptotic(double n, double p);

/// Exponent of the polynomial-growth tail bound; see polynomial_tail_exponent.
double poly_tail_exponent(double alpha, double p);

/// Twelve points m_g^{i/13}, i = 1..12, geometrically spaced in (1, m_g).
std::vector<double> default_a_grid(double g);

/// {0.05, 0.10, ..., 0.95}.
std::vector<double> default_beta_grid();

enum class Verdict { Pass, VacuousPass, Fail };

const char* to_string(Verdict v);

struct BoundCheck {
  std::string kind;      // "mean", "tail", "laplace" or "explicit_g"
  std::string g_option;  // "volume" or "resistance"
  double parameter;      // a for tails, beta for transforms, NaN otherwise
  double exact;
  double bound;
  double margin;  // positive when the inequality holds with room
  Verdict verdict;
};

struct GOption {
  std::string name;
  double g;
  double mean_passage;
  double mean_bound;
  bool vacuous;
  /// (a, exp(-I_g(a) n)) over the a-grid used for this option.
  std::vector<std::pair<double, double>> ld_curve;
};

struct BoundOptions {
  std::vector<double> a_grid;     // empty: default_a_grid per option
  std::vector<double> beta_grid;  // empty: default_beta_grid
  double relative_slack = 1e-9;
  double laplace_slack = 1e-9;
};

struct BoundReport {
  bool reachable = true;
  std::size_t distance = 0;
  /// Largest admissible n, dist(o,z) - 1.
  std::size_t n = 0;
  double ratio = 0.0;  // w_z / w_o
  double resistance = 0.0;
  double expected_T = 0.0;
  double g_a = 0.0;
  double g_prime = 0.0;  // NaN when n < 3
  double g_b = 0.0;
  double mean_bound_a = 0.0;
  double mean_bound_b = 0.0;
  std::vector<GOption> options;
  std::vector<BoundCheck> checks;

  std::size_t violations() const;
  bool passed() const { return violations() == 0; }
};

/// Runs every bound on the contracted, accessible part of the graph and
/// records one check per inequality. Throws std::domain_error when
/// dist(o,z) = 1.
BoundReport check_hitting_bounds(const WeightedGraph& g, const BoundOptions& options = {});

}  // namespace hitting
