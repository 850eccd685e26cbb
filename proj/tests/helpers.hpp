#pragma once

#include "fuzzvec/geometry.hpp"

#include <cmath>
#include <vector>

namespace testing {

using fuzzvec::geometry::ConvexBody;
using fuzzvec::geometry::Direction;
using fuzzvec::geometry::Vector;

inline bool near(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

inline Vector v2(double x, double y) { return Vector{{x, y}}; }
inline Vector v1(double x) { return Vector::Constant(1, x); }

inline bool near_vec(const Vector& a, const Vector& b, double tol = 1e-12) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

/// Largest |h_A - h_B| over the directions.
inline double support_distance(const ConvexBody& a, const ConvexBody& b, const std::vector<Direction>& dirs) {
  double worst = 0.0;
  for (const auto& d : dirs)
    worst = std::max(worst, std::abs(fuzzvec::geometry::support(a, d) - fuzzvec::geometry::support(b, d)));
  return worst;
}

}  // namespace testing
