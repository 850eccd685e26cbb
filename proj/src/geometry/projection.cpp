#include "fuzzvec/errors.hpp"
#include "fuzzvec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fuzzvec::geometry::detail {

namespace {

// Affine minimizer of |sum v_i p_i| subject to sum v_i = 1 over the corral.
Eigen::VectorXd affine_minimizer(std::span<const Vector> points, const std::vector<int>& corral) {
  const auto k = static_cast<Eigen::Index>(corral.size());
  Matrix kkt = Matrix::Zero(k + 1, k + 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double g = points[corral[i]].dot(points[corral[j]]);
      kkt(i, j) = g;
      kkt(j, i) = g;
    }
    kkt(i, k) = 1.0;
    kkt(k, i) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  Eigen::VectorXd v = sol.head(k);
  const double s = v.sum();
  if (s != 0.0) v /= s;
  return v;
}

Vector combine(std::span<const Vector> points, const std::vector<int>& corral, const Eigen::VectorXd& w) {
  Vector x = Vector::Zero(points[corral[0]].size());
  for (std::size_t i = 0; i < corral.size(); ++i) x += w(static_cast<Eigen::Index>(i)) * points[corral[i]];
  return x;
}

}  // namespace

Vector min_norm_point(std::span<const Vector> points) {
  if (points.empty()) throw InvalidArgument("min_norm_point: empty point set");
  const auto m = static_cast<int>(points.size());
  double max_sq = 0.0;
  int start = 0;
  for (int i = 0; i < m; ++i) {
    const double sq = points[i].squaredNorm();
    max_sq = std::max(max_sq, sq);
    if (sq < points[start].squaredNorm()) start = i;
  }
  if (m == 1 || max_sq == 0.0) return points[start];

  constexpr double kWeightFloor = 1e-14;
  std::vector<int> corral{start};
  Eigen::VectorXd w = Eigen::VectorXd::Ones(1);
  Vector x = points[start];
  int iterations = 0;

  while (true) {
    int j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double d = x.dot(points[i]);
      if (d < best) {
        best = d;
        j = i;
      }
    }
    if (x.squaredNorm() - best <= kProjectionGapTol * max_sq) break;
    if (std::find(corral.begin(), corral.end(), j) != corral.end()) break;
    corral.push_back(j);
    w.conservativeResize(w.size() + 1);
    w(w.size() - 1) = 0.0;

    while (true) {
      if (++iterations > kProjectionMaxIter) {
        throw NumericalFailure("polytope projection did not converge within " +
                               std::to_string(kProjectionMaxIter) + " iterations");
      }
      const Eigen::VectorXd v = affine_minimizer(points, corral);
      if ((v.array() > kWeightFloor).all()) {
        w = v;
        break;
      }
      double theta = 1.0;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) <= kWeightFloor && w(i) - v(i) > 0.0) theta = std::min(theta, w(i) / (w(i) - v(i)));
      }
      w = (1.0 - theta) * w + theta * v;
      std::vector<int> kept;
      std::vector<double> kept_w;
      for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) > kWeightFloor) {
          kept.push_back(corral[static_cast<std::size_t>(i)]);
          kept_w.push_back(w(i));
        }
      }
      if (kept.empty()) {
        // Rounding removed everything; restart from the best vertex of the corral.
        kept.push_back(corral[0]);
        kept_w.push_back(1.0);
      }
      corral = std::move(kept);
      w = Eigen::Map<Eigen::VectorXd>(kept_w.data(), static_cast<Eigen::Index>(kept_w.size()));
      w /= w.sum();
    }
    const Vector next = combine(points, corral, w);
    // Wolfe iterates strictly decrease the norm; a stall means rounding noise.
    if (next.squaredNorm() >= x.squaredNorm()) break;
    x = next;
  }
  return x;
}

Vector project_to_polytope(std::span<const Vector> generators, const Vector& x) {
  std::vector<Vector> shifted;
  shifted.reserve(generators.size());
  for (const auto& g : generators) shifted.push_back(g - x);
  return x + min_norm_point(shifted);
}

}  // namespace fuzzvec::geometry::detail
