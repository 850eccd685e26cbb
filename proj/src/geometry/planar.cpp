#include "fuzzvec/detail/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fuzzvec::geometry::planar {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

Point segment_projection(const Point& p, const Point& a, const Point& b) {
  const Point ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return a;
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return a + t * ab;
}

double segment_distance(const Point& p, const Point& a, const Point& b) {
  return (p - segment_projection(p, a, b)).norm();
}

Ring convex_ring(std::span<const Point> points, double eps) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;

  // Andrew's monotone chain; exactly collinear points are popped here, the
  // tolerance pass below handles near-collinear and near-duplicate ones.
  Ring hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  bool changed = true;
  while (changed && hull.size() >= 3) {
    changed = false;
    const std::size_t m = hull.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point& prev = hull[(i + m - 1) % m];
      const Point& next = hull[(i + 1) % m];
      if (segment_distance(hull[i], prev, next) <= eps) {
        hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (hull.size() == 2 && (hull[0] - hull[1]).norm() <= eps) hull.resize(1);
  return hull;
}

Point project(const Ring& ring, const Point& p) {
  if (ring.size() == 1) return ring[0];
  if (ring.size() == 2) return segment_projection(p, ring[0], ring[1]);
  const std::size_t m = ring.size();
  bool inside = true;
  for (std::size_t i = 0; i < m && inside; ++i) {
    if (cross(ring[i], ring[(i + 1) % m], p) < 0.0) inside = false;
  }
  if (inside) return p;
  Point best = ring[0];
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    const Point q = segment_projection(p, ring[i], ring[(i + 1) % m]);
    const double d = (p - q).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return best;
}

Ring clip(const Ring& ring, const Point& n, double h, double eps) {
  Ring out;
  const std::size_t m = ring.size();
  if (m == 0) return out;
  auto side = [&](const Point& p) { return p.dot(n) - h; };
  if (m == 1) {
    if (side(ring[0]) <= eps) out.push_back(ring[0]);
    return out;
  }
  // A segment is walked as the closed ring a -> b -> a.
  for (std::size_t i = 0; i < m; ++i) {
    const Point& cur = ring[i];
    const Point& nxt = ring[(i + 1) % m];
    const double sc = side(cur);
    const double sn = side(nxt);
    const bool cin = sc <= eps;
    const bool nin = sn <= eps;
    if (cin) out.push_back(cur);
    if (cin != nin) {
      const double t = sc / (sc - sn);
      out.push_back(cur + t * (nxt - cur));
    }
  }
  if (m == 2) {
    // Remove the duplicate produced by walking the segment twice.
    Ring dedup;
    for (const auto& p : out) {
      if (std::none_of(dedup.begin(), dedup.end(), [&](const Point& q) { return (p - q).norm() <= eps; }))
        dedup.push_back(p);
    }
    return dedup;
  }
  return out;
}

std::vector<Point> edge_normals(const Ring& ring) {
  std::vector<Point> normals;
  const std::size_t m = ring.size();
  if (m < 2) return normals;
  for (std::size_t i = 0; i < m; ++i) {
    const Point e = ring[(i + 1) % m] - ring[i];
    normals.emplace_back(Point(e.y(), -e.x()).normalized());
  }
  return normals;
}

}  // namespace fuzzvec::geometry::planar
