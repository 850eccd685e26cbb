#include "fuzzvec/detail/planar.hpp"
#include "fuzzvec/errors.hpp"
#include "fuzzvec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fuzzvec::geometry {

namespace {

void require_dim(int expected, int actual, const char* what) {
  if (expected != actual) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << expected << " vs " << actual << ")";
    throw InvalidArgument(os.str());
  }
}

std::vector<planar::Point> to_planar(const std::vector<Vector>& pts) {
  std::vector<planar::Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p[0], p[1]);
  return out;
}

Vector from_planar(const planar::Point& p) {
  Vector v(2);
  v << p.x(), p.y();
  return v;
}

std::vector<Vector> extreme_points(int dim, std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) { return a == b; }),
            pts.end());
  if (pts.size() <= 1) return pts;

  if (dim == 1) {
    return pts;  // handled by the caller
  }
  if (dim == 2) {
    const auto ring = planar::convex_ring(to_planar(pts), kEps);
    std::vector<Vector> out;
    for (const auto& p : ring) out.push_back(from_planar(p));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }
  // A point is kept when its distance to the hull of the remaining kept and
  // untested points exceeds kEps. Dropping a point inside the hull of the
  // others leaves that hull unchanged, so one sequential pass suffices.
  std::vector<bool> kept(pts.size(), true);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i && kept[j]) others.push_back(pts[j]);
    if (others.empty()) break;
    const Vector p = detail::project_to_polytope(others, pts[i]);
    if ((p - pts[i]).norm() <= kEps) kept[i] = false;
  }
  std::vector<Vector> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (kept[i]) out.push_back(pts[i]);
  return out;
}

}  // namespace

bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// Direction

Direction::Direction(Vector v) : v_(std::move(v)) {
  if (v_.size() < 1) throw InvalidArgument("Direction: empty vector");
  if (!v_.allFinite() || std::abs(v_.norm() - 1.0) > kUnitTol)
    throw InvalidArgument("Direction: vector is not of unit length");
}

Direction Direction::normalized(const Vector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("Direction: cannot normalize zero vector");
  return Direction(v / n, Trusted{});
}

Direction Direction::from_angle(double theta) {
  Vector v(2);
  v << std::cos(theta), std::sin(theta);
  return Direction(std::move(v), Trusted{});
}

Direction Direction::axis(int dim, int index, double sign) {
  if (index < 0 || index >= dim) throw InvalidArgument("Direction::axis: index out of range");
  Vector v = Vector::Zero(dim);
  v[index] = sign < 0 ? -1.0 : 1.0;
  return Direction(std::move(v), Trusted{});
}

Direction Direction::operator-() const { return Direction(-v_, Trusted{}); }

// ---------------------------------------------------------------------------
// Construction

ConvexBody ConvexBody::raw(int dim, std::vector<Vector> generators, double radius) {
  if (dim < 1) throw InvalidArgument("ConvexBody: dimension must be positive");
  if (generators.empty()) throw InvalidArgument("ConvexBody: empty generator list");
  for (const auto& g : generators) require_dim(dim, static_cast<int>(g.size()), "ConvexBody");
  if (!(radius >= 0.0)) throw InvalidArgument("ConvexBody: negative radius");
  return ConvexBody(dim, std::move(generators), radius, false);
}

ConvexBody make_body(int dim, std::vector<Vector> points, double radius) {
  if (dim < 1) throw InvalidArgument("make_body: dimension must be positive");
  if (points.empty()) throw InvalidArgument("make_body: empty point list");
  if (!(radius >= 0.0) || !std::isfinite(radius)) throw InvalidArgument("make_body: negative radius");
  for (const auto& p : points) {
    require_dim(dim, static_cast<int>(p.size()), "make_body");
    if (!p.allFinite()) throw InvalidArgument("make_body: non-finite coordinate");
  }
  if (dim == 1) {
    double lo = points.front()[0];
    double hi = lo;
    for (const auto& p : points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    Vector mid(1);
    mid << 0.5 * (lo + hi);
    return ConvexBody(1, {mid}, radius + 0.5 * (hi - lo), true);
  }
  return ConvexBody(dim, extreme_points(dim, std::move(points)), radius, true);
}

ConvexBody ball(int dim, double radius) {
  if (!(radius >= 0.0)) throw InvalidArgument("ball: negative radius");
  return make_body(dim, {Vector::Zero(dim)}, radius);
}

ConvexBody point_body(const Vector& p) { return make_body(static_cast<int>(p.size()), {p}, 0.0); }

ConvexBody box(const Vector& lo, const Vector& hi) {
  require_dim(static_cast<int>(lo.size()), static_cast<int>(hi.size()), "box");
  const auto n = static_cast<int>(lo.size());
  if (n > 20) throw Unsupported("box: dimension too large for vertex enumeration");
  std::vector<Vector> pts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1u ? hi[i] : lo[i];
    pts.push_back(std::move(v));
  }
  return make_body(n, std::move(pts), 0.0);
}

// ---------------------------------------------------------------------------
// Support

double support(const ConvexBody& body, const Direction& x) {
  require_dim(body.dim(), x.dim(), "support");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& g : body.generators()) best = std::max(best, g.dot(x.vec()));
  return best + body.radius();
}

double support_homogeneous(const ConvexBody& body, const Vector& v) {
  require_dim(body.dim(), static_cast<int>(v.size()), "support_homogeneous");
  const double n = v.norm();
  if (n == 0.0) return 0.0;
  return n * support(body, Direction::normalized(v));
}

Vector support_point(const ConvexBody& body, const Direction& x) {
  require_dim(body.dim(), x.dim(), "support_point");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& g : body.generators()) best = std::max(best, g.dot(x.vec()));
  const Vector* chosen = nullptr;
  for (const auto& g : body.generators()) {
    if (g.dot(x.vec()) >= best - kEps && (chosen == nullptr || lex_less(g, *chosen))) chosen = &g;
  }
  return *chosen + body.radius() * x.vec();
}

SupportSampleTable sample_support(const ConvexBody& body, std::vector<Direction> directions) {
  SupportSampleTable table;
  table.values.reserve(directions.size());
  for (const auto& d : directions) table.values.push_back(support(body, d));
  table.directions = std::move(directions);
  return table;
}

// ---------------------------------------------------------------------------
// Minkowski algebra

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
  require_dim(a.dim(), b.dim(), "minkowski_sum");
  std::vector<Vector> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) sums.push_back(p + q);
  return make_body(a.dim(), std::move(sums), a.radius() + b.radius());
}

ConvexBody scale(const ConvexBody& a, double factor) {
  if (!(factor >= 0.0)) throw InvalidArgument("scale: negative factor");
  std::vector<Vector> gens;
  for (const auto& g : a.generators()) gens.push_back(factor * g);
  return make_body(a.dim(), std::move(gens), factor * a.radius());
}

ConvexBody transform(const ConvexBody& a, const Matrix& q) {
  if (q.rows() != a.dim() || q.cols() != a.dim()) throw InvalidArgument("transform: matrix shape mismatch");
  if (((q.transpose() * q) - Matrix::Identity(a.dim(), a.dim())).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("transform: matrix is not orthogonal");
  std::vector<Vector> gens;
  for (const auto& g : a.generators()) gens.push_back(q * g);
  return make_body(a.dim(), std::move(gens), a.radius());
}

ConvexBody translate(const ConvexBody& a, const Vector& shift) {
  require_dim(a.dim(), static_cast<int>(shift.size()), "translate");
  std::vector<Vector> gens;
  for (const auto& g : a.generators()) gens.push_back(g + shift);
  return make_body(a.dim(), std::move(gens), a.radius());
}

// ---------------------------------------------------------------------------
// Projection and membership

Vector metric_projection(const ConvexBody& body, const Vector& x) {
  require_dim(body.dim(), static_cast<int>(x.size()), "metric_projection");
  Vector p;
  if (body.dim() == 1) {
    double lo = body.generators().front()[0];
    double hi = lo;
    for (const auto& g : body.generators()) {
      lo = std::min(lo, g[0]);
      hi = std::max(hi, g[0]);
    }
    p = Vector::Constant(1, std::clamp(x[0], lo, hi));
  } else if (body.dim() == 2) {
    const auto ring = planar::convex_ring(to_planar(body.generators()), 0.0);
    p = from_planar(planar::project(ring, planar::Point(x[0], x[1])));
  } else {
    p = detail::project_to_polytope(body.generators(), x);
  }
  const Vector offset = x - p;
  const double d = offset.norm();
  if (d <= body.radius()) return x;
  return p + (body.radius() / d) * offset;
}

double distance(const ConvexBody& body, const Vector& x) { return (x - metric_projection(body, x)).norm(); }

bool contains(const ConvexBody& body, const Vector& x, double tol) {
  if (!(tol >= 0.0)) throw InvalidArgument("contains: negative tolerance");
  return distance(body, x) <= tol;
}

Hyperplane separating_support_hyperplane(const ConvexBody& body, const Vector& x) {
  const Vector p = metric_projection(body, x);
  const Vector offset = x - p;
  if (offset.norm() <= kEps) throw InvalidArgument("separating_support_hyperplane: point lies in the body");
  Hyperplane h{Direction::normalized(offset), 0.0};
  h.offset = p.dot(h.normal.vec());
  if (std::abs(support(body, h.normal) - h.offset) > 1e-9 || !(x.dot(h.normal.vec()) > h.offset))
    throw NumericalFailure("separating_support_hyperplane: postcondition failed");
  return h;
}

Hyperplane support_hyperplane_in_direction(const ConvexBody& body, const Direction& x) {
  return Hyperplane{x, support(body, x)};
}

// ---------------------------------------------------------------------------
// Balls and decomposition

bool is_ball(const ConvexBody& body, double tol) {
  const ConvexBody& c = body.canonical() ? body : make_body(body.dim(), body.generators(), body.radius());
  return c.generators().size() == 1 && c.generators().front().norm() <= tol;
}

Decomposition canonical_decompose(const ConvexBody& body) {
  if (!body.canonical()) throw InvalidArgument("canonical_decompose: body is not canonical");
  return Decomposition{ConvexBody::raw(body.dim(), body.generators(), 0.0), body.radius()};
}

bool canonical_match(const ConvexBody& a, const ConvexBody& b, double tol) {
  if (a.dim() != b.dim()) return false;
  if (std::abs(a.radius() - b.radius()) > tol) return false;
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  if (ga.size() != gb.size()) return false;
  // Lexicographic order is not stable under round-off in a tied coordinate,
  // so generators are paired as sets.
  std::vector<bool> used(gb.size(), false);
  for (const auto& p : ga) {
    bool matched = false;
    for (std::size_t j = 0; j < gb.size() && !matched; ++j) {
      if (used[j] || (p - gb[j]).cwiseAbs().maxCoeff() > tol) continue;
      used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Planar helpers

std::vector<Vector> polygon_ring(const ConvexBody& body) {
  if (body.dim() != 2) throw InvalidArgument("polygon_ring: body is not planar");
  std::vector<Vector> out;
  for (const auto& p : planar::convex_ring(to_planar(body.generators()), 0.0)) out.push_back(from_planar(p));
  return out;
}

std::vector<Direction> edge_normals(const ConvexBody& body) {
  std::vector<Direction> out;
  if (body.dim() == 1) {
    out.push_back(Direction::axis(1, 0, 1.0));
    out.push_back(Direction::axis(1, 0, -1.0));
    return out;
  }
  if (body.dim() != 2) throw Unsupported("edge_normals: dimension >= 3");
  const auto ring = planar::convex_ring(to_planar(body.generators()), 0.0);
  for (const auto& n : planar::edge_normals(ring)) out.push_back(Direction::normalized(from_planar(n)));
  return out;
}

std::vector<Direction> circle_directions(int count, double phase) {
  if (count < 1) throw InvalidArgument("circle_directions: count must be positive");
  std::vector<Direction> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(Direction::from_angle(phase + 2.0 * std::numbers::pi * i / count));
  return out;
}

std::string describe(const ConvexBody& body) {
  std::ostringstream os;
  os << "conv{";
  for (std::size_t i = 0; i < body.generators().size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (Eigen::Index k = 0; k < body.generators()[i].size(); ++k) os << (k ? "," : "") << body.generators()[i][k];
    os << ")";
  }
  os << "} + B(" << body.radius() << ")";
  return os.str();
}

}  // namespace fuzzvec::geometry
