#include "killed_system.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/LU>
#include <Eigen/SparseCore>

namespace hitting::detail {

struct KilledSystem::Impl {
  // Tridiagonal: unknowns in path order; lower[i] couples i-1 and i.
  std::vector<double> lower;
  // Thomas factors.
  std::vector<double> c_star, denom;

  Eigen::LLT<Eigen::MatrixXd> llt;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  bool use_lu = false;

  Eigen::SparseMatrix<double> sparse;
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
};

KilledSystem::~KilledSystem() = default;
KilledSystem::KilledSystem(KilledSystem&&) noexcept = default;

KilledSystem::KilledSystem(const WeightedGraph& g, double beta)
    : graph_(&g), beta_(beta), method_(Method::Dense), impl_(std::make_unique<Impl>()) {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("beta must lie in (0, 1]");
  const std::size_t n = g.vertex_count();

  // Liveness: at beta = 1 only components of V \ z that touch z are solvable.
  std::vector<char> live(n, 0);
  if (beta < 1.0) {
    for (Vertex x = 0; x < n; ++x) live[x] = !g.is_target(x);
  } else {
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (g.is_target(s) || seen[s]) continue;
      std::vector<Vertex> component;
      bool touches = false;
      std::deque<Vertex> queue{s};
      seen[s] = 1;
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        component.push_back(u);
        for (const Arc& a : g.neighbors(u)) {
          if (g.is_target(a.to)) {
            touches = true;
          } else if (!seen[a.to]) {
            seen[a.to] = 1;
            queue.push_back(a.to);
          }
        }
      }
      if (touches) {
        for (Vertex u : component) live[u] = 1;
      }
    }
  }

  std::vector<Vertex> order;
  const bool path = g.is_path();
  if (path) {
    method_ = Method::Tridiagonal;
    order = g.path_order();
  } else {
    order.resize(n);
    for (Vertex x = 0; x < n; ++x) order[x] = x;
  }
  unknown_of_.assign(n, kNone);
  for (Vertex x : order) {
    if (!live[x]) continue;
    unknown_of_[x] = vertex_of_.size();
    vertex_of_.push_back(x);
  }
  const std::size_t m = vertex_of_.size();
  if (!path) method_ = m <= kDenseLimit ? Method::Dense : Method::Iterative;

  // Off-loop weight plus (1 - beta) w(x,x), so heavy self-loops do not cancel.
  auto diagonal = [&](Vertex x) {
    double off = 0.0, loop = 0.0;
    for (const auto& a : g.neighbors(x)) (a.to == x ? loop : off) += a.weight;
    return off + (1.0 - beta) * loop;
  };

  switch (method_) {
    case Method::Tridiagonal: {
      impl_->lower.assign(m, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        if (i > 0) impl_->lower[i] = -beta * g.weight(vertex_of_[i - 1], vertex_of_[i]);
      }
      // Pivots are tracked through their excess over the next coupling,
      // e_i = k_i + |l_i| e_{i-1} / d_{i-1}, where k_i is the weight the
      // vertex loses to killing and to non-live neighbours. Every term is
      // nonnegative, so long paths with wide weight ranges stay accurate.
      impl_->c_star.assign(m, 0.0);
      impl_->denom.assign(m, 0.0);
      double excess = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const Vertex x = vertex_of_[i];
        double k = 0.0;
        for (const auto& a : g.neighbors(x)) {
          const bool coupled = a.to != x && unknown_of_[a.to] != kNone;
          k += (a.to == x || coupled) ? (1.0 - beta) * a.weight : a.weight;
        }
        double e = k;
        if (i > 0) e += -impl_->lower[i] * excess / impl_->denom[i - 1];
        const double next = (i + 1 < m) ? -impl_->lower[i + 1] : 0.0;
        const double d = e + next;
        if (!(d > 0.0)) throw std::runtime_error("singular killed system (zero pivot)");
        impl_->denom[i] = d;
        impl_->c_star[i] = (i + 1 < m) ? impl_->lower[i + 1] / d : 0.0;
        excess = e;
      }
      break;
    }
    case Method::Dense: {
      Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
      for (std::size_t i = 0; i < m; ++i) {
        const Vertex x = vertex_of_[i];
        mat(i, i) = diagonal(x);
        for (const Arc& a : g.neighbors(x)) {
          if (a.to == x) continue;
          const std::size_t j = unknown_of_[a.to];
          if (j != kNone) mat(i, j) = -beta * a.weight;
        }
      }
      impl_->llt.compute(mat);
      if (impl_->llt.info() != Eigen::Success) {
        impl_->use_lu = true;
        impl_->lu.compute(mat);
      }
      break;
    }
    case Method::Iterative: {
      std::vector<Eigen::Triplet<double>> entries;
      for (std::size_t i = 0; i < m; ++i) {
        const Vertex x = vertex_of_[i];
        entries.emplace_back(i, i, diagonal(x));
        for (const Arc& a : g.neighbors(x)) {
          if (a.to == x) continue;
          const std::size_t j = unknown_of_[a.to];
          if (j != kNone) entries.emplace_back(i, j, -beta * a.weight);
        }
      }
      impl_->sparse.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
      impl_->sparse.setFromTriplets(entries.begin(), entries.end());
      impl_->cg.setTolerance(kIterativeTolerance);
      impl_->cg.setMaxIterations(static_cast<Eigen::Index>(std::min<std::size_t>(20 * m, 2'000'000)));
      impl_->cg.compute(impl_->sparse);
      break;
    }
  }
}

std::vector<double> KilledSystem::solve(const std::vector<double>& rhs) const {
  const std::size_t n = graph_->vertex_count();
  if (rhs.size() != n) throw std::invalid_argument("right-hand side has wrong length");
  const std::size_t m = vertex_of_.size();
  std::vector<double> out(n, 0.0);
  if (m == 0) return out;

  switch (method_) {
    case Method::Tridiagonal: {
      std::vector<double> d(m);
      for (std::size_t i = 0; i < m; ++i) {
        double v = rhs[vertex_of_[i]];
        if (i > 0) v -= impl_->lower[i] * d[i - 1];
        d[i] = v / impl_->denom[i];
      }
      for (std::size_t i = m - 1; i-- > 0;) d[i] -= impl_->c_star[i] * d[i + 1];
      for (std::size_t i = 0; i < m; ++i) out[vertex_of_[i]] = d[i];
      break;
    }
    case Method::Dense:
    case Method::Iterative: {
      Eigen::VectorXd b(static_cast<Eigen::Index>(m));
      for (std::size_t i = 0; i < m; ++i) b(i) = rhs[vertex_of_[i]];
      Eigen::VectorXd u;
      if (method_ == Method::Dense) {
        u = impl_->use_lu ? Eigen::VectorXd(impl_->lu.solve(b)) : Eigen::VectorXd(impl_->llt.solve(b));
      } else {
        u = impl_->cg.solve(b);
        if (impl_->cg.info() != Eigen::Success) {
          throw std::runtime_error("iterative solve did not reach tolerance within the iteration cap");
        }
      }
      for (std::size_t i = 0; i < m; ++i) out[vertex_of_[i]] = u(i);
      break;
    }
  }
  return out;
}

}  // namespace hitting::detail
