#include "fuzzvec/detail/planar.hpp"
#include "fuzzvec/errors.hpp"
#include "fuzzvec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fuzzvec::geometry {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Sample budget of the certified sphere grid used for dimension >= 3.
constexpr double kSphereGridBudget = 20000.0;

ConvexBody canonical_form(const ConvexBody& a) {
  return a.canonical() ? a : make_body(a.dim(), a.generators(), a.radius());
}

planar::Ring ring_of(const ConvexBody& a) {
  std::vector<planar::Point> pts;
  for (const auto& g : a.generators()) pts.emplace_back(g[0], g[1]);
  return planar::convex_ring(pts, 0.0);
}

double polytope_support(const std::vector<Vector>& gens, const Vector& x) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& g : gens) best = std::max(best, g.dot(x));
  return best;
}

GapEstimate gap_1d(const ConvexBody& a, const ConvexBody& b) {
  GapEstimate out;
  const Direction up = Direction::axis(1, 0, 1.0);
  const Direction down = Direction::axis(1, 0, -1.0);
  const double gu = support(a, up) - support(b, up);
  const double gd = support(a, down) - support(b, down);
  out.value = std::min(gu, gd);
  out.direction = (gd < gu ? down : up).vec();
  return out;
}

// h_A - h_B is piecewise sinusoidal in the angle: between consecutive edge
// normals of either polygon the active vertices a, b are fixed and the
// difference is <a - b, u(theta)>, whose only interior critical minimum is
// at the angle opposite to a - b.
GapEstimate gap_2d(const ConvexBody& a, const ConvexBody& b) {
  std::vector<double> breaks;
  for (const auto* body : {&a, &b}) {
    for (const auto& n : planar::edge_normals(ring_of(*body))) {
      double t = std::atan2(n.y(), n.x());
      if (t < 0) t += kTwoPi;
      breaks.push_back(t);
    }
  }
  if (breaks.empty()) breaks.push_back(0.0);
  std::sort(breaks.begin(), breaks.end());

  std::vector<double> candidates(breaks.begin(), breaks.end());
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const double lo = breaks[i];
    const double hi = i + 1 < breaks.size() ? breaks[i + 1] : breaks[0] + kTwoPi;
    if (hi - lo <= 0.0) continue;
    const double mid = 0.5 * (lo + hi);
    const Vector u{{std::cos(mid), std::sin(mid)}};
    const Vector* pa = &a.generators().front();
    const Vector* pb = &b.generators().front();
    for (const auto& g : a.generators())
      if (g.dot(u) > pa->dot(u)) pa = &g;
    for (const auto& g : b.generators())
      if (g.dot(u) > pb->dot(u)) pb = &g;
    const Vector c = *pa - *pb;
    if (c.norm() == 0.0) continue;
    double crit = std::atan2(c[1], c[0]) + std::numbers::pi;
    while (crit < lo) crit += kTwoPi;
    while (crit >= lo + kTwoPi) crit -= kTwoPi;
    if (crit > lo && crit < hi) candidates.push_back(crit);
  }

  GapEstimate out;
  out.value = std::numeric_limits<double>::infinity();
  for (double t : candidates) {
    const Direction u = Direction::from_angle(t);
    const double g = support(a, u) - support(b, u);
    if (g < out.value) {
      out.value = g;
      out.direction = u.vec();
    }
  }
  return out;
}

// Points of the boundary of [-1,1]^n on a regular grid, radially projected.
// Radial projection from outside the unit ball is non-expansive, so every
// unit vector lies within `cover` of a sample.
std::vector<Vector> sphere_grid(int n, double& cover) {
  const double per_face = kSphereGridBudget / (2.0 * n);
  const int k = std::max(3, static_cast<int>(std::floor(std::pow(per_face, 1.0 / (n - 1)))));
  const double step = 2.0 / (k - 1);
  cover = 0.5 * step * std::sqrt(static_cast<double>(n - 1));
  std::vector<Vector> out;
  std::vector<int> idx(static_cast<std::size_t>(n - 1), 0);
  for (int axis = 0; axis < n; ++axis) {
    for (double sign : {-1.0, 1.0}) {
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        Vector v(n);
        for (int i = 0, j = 0; i < n; ++i) v[i] = i == axis ? sign : -1.0 + step * idx[static_cast<std::size_t>(j++)];
        out.push_back(v.normalized());
        std::size_t p = 0;
        while (p < idx.size() && ++idx[p] == k) idx[p++] = 0;
        if (p == idx.size()) break;
      }
    }
  }
  return out;
}

}  // namespace

namespace detail {

GapEstimate support_gap_by_projection(const ConvexBody& a, const ConvexBody& b) {
  GapEstimate out;
  const double base = a.radius() - b.radius();
  double scale = 1.0;
  for (const auto* body : {&a, &b})
    for (const auto& g : body->generators()) scale = std::max(scale, g.cwiseAbs().maxCoeff());
  // Projection distances at rounding level mean "on or inside".
  const double on_boundary = 1e-12 * scale;
  double worst_outside = std::numeric_limits<double>::infinity();
  Vector outside_dir;
  std::vector<std::pair<const Vector*, double>> inside;
  for (const auto& g : b.generators()) {
    const Vector q = project_to_polytope(a.generators(), g);
    const double d = (g - q).norm();
    if (d > on_boundary) {
      if (-d < worst_outside) {
        worst_outside = -d;
        outside_dir = (g - q) / d;
      }
    } else {
      inside.emplace_back(&g, d);
    }
  }
  if (std::isfinite(worst_outside)) {
    out.value = base + worst_outside;
    out.direction = outside_dir;
    return out;
  }

  // Every generator of b lies in a's polytope part (up to d): the gap is base
  // plus the smallest boundary depth, which is at least -d. Bound it from
  // below with the sampled minimum minus the Lipschitz slack of h_{P_A} - <g, .>.
  double cover = 0.0;
  const auto samples = sphere_grid(a.dim(), cover);
  double best = std::numeric_limits<double>::infinity();
  out.direction = samples.front();
  for (const auto& [g, d] : inside) {
    double lip = 0.0;
    for (const auto& v : a.generators()) lip = std::max(lip, (v - *g).norm());
    double sampled = std::numeric_limits<double>::infinity();
    Vector arg = samples.front();
    for (const auto& x : samples) {
      const double depth = polytope_support(a.generators(), x) - g->dot(x);
      if (depth < sampled) {
        sampled = depth;
        arg = x;
      }
    }
    const double bound = std::max(-d, sampled - lip * cover);
    if (bound < best) {
      best = bound;
      out.slack = sampled - bound;
      out.direction = arg;
    }
  }
  out.value = base + best;
  out.exact = false;
  return out;
}

}  // namespace detail

GapEstimate support_gap_estimate(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("support_gap: dimension mismatch");
  switch (a.dim()) {
    case 1:
      return gap_1d(a, b);
    case 2:
      return gap_2d(a, b);
    default:
      return detail::support_gap_by_projection(a, b);
  }
}

double support_gap(const ConvexBody& a, const ConvexBody& b) { return support_gap_estimate(a, b).value; }

bool includes(const ConvexBody& a, const ConvexBody& b, double tol) { return support_gap(a, b) >= -tol; }

bool equals(const ConvexBody& a, const ConvexBody& b, double tol) { return includes(a, b, tol) && includes(b, a, tol); }

std::optional<ConvexBody> inner_parallel_body(const ConvexBody& body, double lambda) {
  if (!(lambda >= 0.0)) throw InvalidArgument("inner_parallel_body: negative distance");
  const ConvexBody a = canonical_form(body);
  if (lambda <= a.radius()) return make_body(a.dim(), a.generators(), a.radius() - lambda);

  const double depth = lambda - a.radius();
  if (a.dim() == 1) return std::nullopt;  // the polytope part is a point
  if (a.dim() >= 3) throw Unsupported("inner_parallel_body: erosion beyond the regular range needs dimension <= 2");

  planar::Ring ring = ring_of(a);
  if (ring.size() < 3) return std::nullopt;
  double scale = 1.0;
  for (const auto& p : ring) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double eps = 1e-12 * scale;
  const auto normals = planar::edge_normals(ring);
  const planar::Ring original = ring;
  for (std::size_t i = 0; i < normals.size() && !ring.empty(); ++i)
    ring = planar::clip(ring, normals[i], normals[i].dot(original[i]) - depth, eps);
  if (ring.empty()) return std::nullopt;
  std::vector<Vector> pts;
  for (const auto& p : ring) pts.emplace_back(Vector{{p.x(), p.y()}});
  return make_body(2, std::move(pts), 0.0);
}

bool is_regular_ipb(const ConvexBody& body, double lambda) {
  if (!(lambda >= 0.0)) throw InvalidArgument("is_regular_ipb: negative distance");
  const ConvexBody a = canonical_form(body);
  const bool by_radius = lambda <= a.radius() + kEps;
  if (!by_radius && a.dim() >= 3) return false;

  const auto inner = inner_parallel_body(a, lambda);
  const bool by_sum = inner.has_value() && equals(minkowski_sum(*inner, ball(a.dim(), lambda)), a, kEps);
  // Very close to the threshold the sum criterion cannot resolve the
  // difference, which is proportional to lambda - radius.
  if (by_sum != by_radius && std::abs(lambda - a.radius()) > 1e-6)
    throw NumericalFailure("is_regular_ipb: radius and reconstruction criteria disagree");
  return by_radius;
}

}  // namespace fuzzvec::geometry
