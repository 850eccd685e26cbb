#pragma once

// Convex bodies in the rounded V-polytope representation
//
//     A = conv(generators) + B(radius)
//
// The representation is closed under Minkowski sums, non-negative scaling
// and orthogonal maps, and its support function is evaluated exactly.
// Canonical bodies keep only extreme generators (sorted lexicographically),
// so the polytope part is the irreducible factor of A and the radius is the
// largest regular erosion distance.
//
// Exactness tiers: every operation is exact (up to rounding) in dimension
// 1 and 2. In dimension >= 3 construction, support evaluation, Minkowski
// sums, projection, membership and erosion inside the regular range are
// exact; support_gap returns a certified lower bound flagged approximate
// when it cannot be computed in closed form, and erosion beyond the regular
// range is not supported.

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fuzzvec::geometry {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Geometric predicate tolerance.
inline constexpr double kEps = 1e-9;
/// Tolerance on the unit norm of a Direction.
inline constexpr double kUnitTol = 1e-12;
/// Relative duality-gap tolerance and iteration cap of the polytope projection.
inline constexpr double kProjectionGapTol = 1e-15;
inline constexpr int kProjectionMaxIter = 10000;

/// Strict lexicographic order on coordinates.
bool lex_less(const Vector& a, const Vector& b);

/// A unit vector of R^n.
class Direction {
 public:
  /// Throws InvalidArgument unless | |v| - 1 | <= kUnitTol.
  explicit Direction(Vector v);

  /// v / |v|; throws InvalidArgument for the zero vector.
  static Direction normalized(const Vector& v);
  static Direction from_angle(double theta);
  static Direction axis(int dim, int index, double sign = 1.0);

  const Vector& vec() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }
  double operator[](int i) const { return v_[i]; }
  Direction operator-() const;

 private:
  struct Trusted {};
  Direction(Vector v, Trusted) : v_(std::move(v)) {}
  Vector v_;
};

/// {t : <t, normal> = offset}; the halfspace below is <= offset.
struct Hyperplane {
  Direction normal;
  double offset;

  double signed_distance(const Vector& t) const { return t.dot(normal.vec()) - offset; }
};

class ConvexBody {
 public:
  /// Wraps the given data without canonicalization (canonical() == false).
  static ConvexBody raw(int dim, std::vector<Vector> generators, double radius);

  int dim() const { return dim_; }
  const std::vector<Vector>& generators() const { return generators_; }
  double radius() const { return radius_; }
  bool canonical() const { return canonical_; }
  /// True when the polytope part is a single point.
  bool single_generator() const { return generators_.size() == 1; }

 private:
  ConvexBody(int dim, std::vector<Vector> generators, double radius, bool canonical)
      : dim_(dim), generators_(std::move(generators)), radius_(radius), canonical_(canonical) {}

  friend ConvexBody make_body(int dim, std::vector<Vector> points, double radius);

  int dim_ = 0;
  std::vector<Vector> generators_;
  double radius_ = 0.0;
  bool canonical_ = false;
};

/// Sampled values of a function on the unit sphere.
struct SupportSampleTable {
  std::vector<Direction> directions;
  std::vector<double> values;

  int dim() const { return directions.empty() ? 0 : directions.front().dim(); }
};

// ---------------------------------------------------------------------------
// Construction

/// Canonical body equal as a set to conv(points) + B(radius).
ConvexBody make_body(int dim, std::vector<Vector> points, double radius = 0.0);
ConvexBody ball(int dim, double radius);
ConvexBody point_body(const Vector& p);
/// Axis-aligned box prod [lo_i, hi_i].
ConvexBody box(const Vector& lo, const Vector& hi);

// ---------------------------------------------------------------------------
// Support functions

double support(const ConvexBody& body, const Direction& x);
/// Positively homogeneous extension: 0 at the origin, |v| h(v/|v|) elsewhere.
double support_homogeneous(const ConvexBody& body, const Vector& v);
/// A point of the body attaining support(body, x); ties pick the
/// lexicographically smallest generator.
Vector support_point(const ConvexBody& body, const Direction& x);
SupportSampleTable sample_support(const ConvexBody& body, std::vector<Direction> directions);

// ---------------------------------------------------------------------------
// Minkowski algebra

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);
ConvexBody scale(const ConvexBody& a, double factor);
/// Image under an orthogonal matrix q (q^T q = I within 1e-10).
ConvexBody transform(const ConvexBody& a, const Matrix& q);
ConvexBody translate(const ConvexBody& a, const Vector& shift);

// ---------------------------------------------------------------------------
// Projection, membership, hyperplanes

Vector metric_projection(const ConvexBody& body, const Vector& x);
double distance(const ConvexBody& body, const Vector& x);
bool contains(const ConvexBody& body, const Vector& x, double tol = kEps);

/// The hyperplane through p_A(x) with exterior normal x - p_A(x).
/// Requires distance(body, x) > kEps.
Hyperplane separating_support_hyperplane(const ConvexBody& body, const Vector& x);
Hyperplane support_hyperplane_in_direction(const ConvexBody& body, const Direction& x);

// ---------------------------------------------------------------------------
// Sublinearity and reconstruction

struct SublinearityViolation {
  enum class Kind { Antipodal, Convexity };
  Kind kind = Kind::Convexity;
  Vector x;
  Vector y;
  double lambda = 0.0;
  double amount = 0.0;  ///< lhs - rhs, positive when violated
};

struct SublinearityReport {
  bool valid = true;
  /// Largest lhs - rhs over all checked inequalities.
  double worst = -std::numeric_limits<double>::infinity();
  /// Set when !valid: the worst antipodal violation if there is one,
  /// otherwise the worst convexity violation.
  std::optional<SublinearityViolation> witness;
  std::size_t checks = 0;
};

/// Checks h(x) + h(-x) >= -tol and the two-point convexity inequality for
/// every sampled pair (x, y) and lambda in {0.25, 0.5, 0.75}. The combined
/// direction is replaced by the nearest sampled direction d, and the
/// inequality is checked in its homogeneous form h(d) <= a h(x) + b h(y)
/// with d = a x + b y (pairs whose d leaves span{x, y} or cone{x, y} are
/// skipped). Throws InvalidArgument if the direction set is not closed
/// under negation.
SublinearityReport check_sublinear(const SupportSampleTable& table, double tol);

/// The body {t : <t, x_i> <= h_i for all samples}. Dimension 1 and 2 only.
ConvexBody body_from_support_samples(const SupportSampleTable& table);

// ---------------------------------------------------------------------------
// Balls, decomposition, inner parallel bodies

bool is_ball(const ConvexBody& body, double tol = kEps);

struct Decomposition {
  ConvexBody irreducible;  ///< polytope part, radius 0
  double lambda;           ///< largest regular erosion distance
};

Decomposition canonical_decompose(const ConvexBody& body);
/// {t : t + B(lambda) in body}; std::nullopt when empty.
std::optional<ConvexBody> inner_parallel_body(const ConvexBody& body, double lambda);
bool is_regular_ipb(const ConvexBody& body, double lambda);

// ---------------------------------------------------------------------------
// Support gaps and inclusion

struct GapEstimate {
  double value = 0.0;  ///< min over the sphere of h_A - h_B (a lower bound if !exact)
  Vector direction;    ///< a minimizing direction (best sampled one if !exact)
  bool exact = true;
  double slack = 0.0;  ///< Lipschitz slack subtracted when !exact
};

GapEstimate support_gap_estimate(const ConvexBody& a, const ConvexBody& b);
double support_gap(const ConvexBody& a, const ConvexBody& b);

bool includes(const ConvexBody& a, const ConvexBody& b, double tol = kEps);
bool equals(const ConvexBody& a, const ConvexBody& b, double tol = kEps);
/// Canonical forms agree: same radius and generator sets within tol.
bool canonical_match(const ConvexBody& a, const ConvexBody& b, double tol = kEps);

// ---------------------------------------------------------------------------
// Planar helpers

/// Counter-clockwise vertex ring of the polytope part (dimension 2).
std::vector<Vector> polygon_ring(const ConvexBody& body);
/// Outer edge normals of the polytope part (dimension 2: one per ring edge,
/// a segment yields both normals; dimension 1: {+1, -1}). Empty for a point.
std::vector<Direction> edge_normals(const ConvexBody& body);
/// count uniformly spaced directions on the circle starting at angle phase.
std::vector<Direction> circle_directions(int count, double phase = 0.0);

std::string describe(const ConvexBody& body);

namespace detail {

/// Point of minimum norm in conv(points) (Wolfe's algorithm).
Vector min_norm_point(std::span<const Vector> points);
/// Projection onto conv(generators), any dimension.
Vector project_to_polytope(std::span<const Vector> generators, const Vector& x);
/// Support gap computed from generator projections; exact whenever some
/// generator of b lies outside a's polytope part, otherwise the certified
/// lower bound. Used for dimension >= 3 and as a cross-check in 2-D.
GapEstimate support_gap_by_projection(const ConvexBody& a, const ConvexBody& b);

}  // namespace detail

}  // namespace fuzzvec::geometry
