#include "fuzzvec/detail/planar.hpp"
#include "fuzzvec/errors.hpp"
#include "fuzzvec/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fuzzvec::geometry {

namespace {

constexpr std::array<double, 3> kLambdaGrid{0.25, 0.5, 0.75};

// Nearest-direction lookup; angle-sorted binary search on the circle,
// linear scan otherwise.
class DirectionIndex {
 public:
  explicit DirectionIndex(const std::vector<Direction>& dirs) : dirs_(dirs) {
    if (!dirs.empty() && dirs.front().dim() == 2) {
      for (std::size_t i = 0; i < dirs.size(); ++i) by_angle_.emplace_back(std::atan2(dirs[i][1], dirs[i][0]), i);
      std::sort(by_angle_.begin(), by_angle_.end());
    }
  }

  std::size_t nearest(const Vector& v) const {
    if (!by_angle_.empty()) {
      const double a = std::atan2(v[1], v[0]);
      auto it = std::lower_bound(by_angle_.begin(), by_angle_.end(), std::make_pair(a, std::size_t{0}));
      const std::size_t m = by_angle_.size();
      const std::size_t hi = static_cast<std::size_t>(it - by_angle_.begin()) % m;
      const std::size_t lo = (hi + m - 1) % m;
      const auto ia = by_angle_[hi].second;
      const auto ib = by_angle_[lo].second;
      return (dirs_[ia].vec() - v).squaredNorm() <= (dirs_[ib].vec() - v).squaredNorm() ? ia : ib;
    }
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dirs_.size(); ++i) {
      const double d = (dirs_[i].vec() - v).squaredNorm();
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    return best;
  }

 private:
  const std::vector<Direction>& dirs_;
  std::vector<std::pair<double, std::size_t>> by_angle_;
};

void validate_table(const SupportSampleTable& table) {
  if (table.directions.empty()) throw InvalidArgument("support table: no directions");
  if (table.directions.size() != table.values.size())
    throw InvalidArgument("support table: directions and values differ in length");
  const int n = table.dim();
  for (const auto& d : table.directions)
    if (d.dim() != n) throw InvalidArgument("support table: mixed dimensions");
  for (double v : table.values)
    if (!std::isfinite(v)) throw InvalidArgument("support table: non-finite value");
}

std::vector<std::size_t> negation_map(const SupportSampleTable& table, const DirectionIndex& index) {
  std::vector<std::size_t> neg(table.directions.size());
  for (std::size_t i = 0; i < table.directions.size(); ++i) {
    const Vector minus = -table.directions[i].vec();
    const std::size_t j = index.nearest(minus);
    if ((table.directions[j].vec() - minus).norm() > kEps)
      throw InvalidArgument("support table: direction set is not closed under negation");
    neg[i] = j;
  }
  return neg;
}

}  // namespace

SublinearityReport check_sublinear(const SupportSampleTable& table, double tol) {
  validate_table(table);
  const DirectionIndex index(table.directions);
  const auto neg = negation_map(table, index);
  const auto& dirs = table.directions;
  const auto& h = table.values;

  SublinearityReport report;
  // The antipodal condition comes first: its worst violation is the witness
  // whenever it fails, otherwise the worst convexity violation is.
  std::optional<SublinearityViolation> antipodal;
  std::optional<SublinearityViolation> convexity;
  auto record = [&](std::optional<SublinearityViolation>& slot, double amount, SublinearityViolation::Kind kind,
                    std::size_t i, std::size_t j, double lambda) {
    ++report.checks;
    report.worst = std::max(report.worst, amount);
    if (amount > tol && (!slot || amount > slot->amount))
      slot = SublinearityViolation{kind, dirs[i].vec(), dirs[j].vec(), lambda, amount};
  };

  for (std::size_t i = 0; i < dirs.size(); ++i)
    record(antipodal, -(h[i] + h[neg[i]]), SublinearityViolation::Kind::Antipodal, i, neg[i], 0.5);

  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Vector& x = dirs[i].vec();
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      const Vector& y = dirs[j].vec();
      const double c = x.dot(y);
      const double det = 1.0 - c * c;
      if (det <= 1e-12) continue;  // parallel or antiparallel pair
      for (double lambda : kLambdaGrid) {
        const Vector z = lambda * x + (1.0 - lambda) * y;
        const std::size_t k = index.nearest(z / z.norm());
        const Vector& d = dirs[k].vec();
        const double dx = d.dot(x);
        const double dy = d.dot(y);
        const double a = (dx - c * dy) / det;
        const double b = (dy - c * dx) / det;
        if (a < -1e-12 || b < -1e-12) continue;
        if ((d - a * x - b * y).norm() > kEps) continue;
        record(convexity, h[k] - (a * h[i] + b * h[j]), SublinearityViolation::Kind::Convexity, i, j, lambda);
      }
    }
  }
  report.valid = report.worst <= tol;
  if (!report.valid) report.witness = antipodal ? antipodal : convexity;
  return report;
}

ConvexBody body_from_support_samples(const SupportSampleTable& table) {
  validate_table(table);
  const int n = table.dim();
  if (n >= 3) throw Unsupported("body_from_support_samples: dimension >= 3");

  const auto report = check_sublinear(table, kEps);
  if (!report.valid) {
    std::ostringstream os;
    os << "sample table is not sublinear (worst violation " << report.worst << ")";
    throw ValidationError("sublinear", os.str());
  }

  if (n == 1) {
    double up = std::numeric_limits<double>::infinity();
    double down = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < table.directions.size(); ++i) {
      if (table.directions[i][0] > 0) up = std::min(up, table.values[i]);
      else down = std::min(down, table.values[i]);
    }
    double lo = -down;
    double hi = up;
    if (lo > hi + kEps) throw ValidationError("sublinear", "support samples define an empty interval");
    if (lo > hi) lo = hi = 0.5 * (lo + hi);
    return make_body(1, {Vector::Constant(1, lo), Vector::Constant(1, hi)}, 0.0);
  }

  // Start from the bounding parallelogram of the most orthogonal pair.
  const auto& dirs = table.directions;
  const auto& h = table.values;
  const DirectionIndex index(dirs);
  const auto neg = negation_map(table, index);
  std::size_t bi = 0;
  std::size_t bj = 0;
  double best_det = 0.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      const double det = std::abs(dirs[i][0] * dirs[j][1] - dirs[i][1] * dirs[j][0]);
      if (det > best_det) {
        best_det = det;
        bi = i;
        bj = j;
      }
    }
  }
  if (best_det < 1e-9) throw ValidationError("sublinear", "support samples do not bound a region");

  double scale = 1.0;
  for (double v : h) scale = std::max(scale, std::abs(v));
  const double eps = 1e-12 * scale;

  const planar::Point x(dirs[bi][0], dirs[bi][1]);
  const planar::Point y(dirs[bj][0], dirs[bj][1]);
  const std::array<double, 2> xs{-h[neg[bi]], h[bi]};
  const std::array<double, 2> ys{-h[neg[bj]], h[bj]};
  if (xs[0] > xs[1] + kEps || ys[0] > ys[1] + kEps)
    throw ValidationError("sublinear", "support samples define an empty region");
  Eigen::Matrix2d m;
  m << x.x(), x.y(), y.x(), y.y();
  const Eigen::Matrix2d inv = m.inverse();
  std::vector<planar::Point> corners;
  for (double s : xs)
    for (double r : ys) corners.push_back(inv * planar::Point(s, r));
  planar::Ring ring = planar::convex_ring(corners, 0.0);

  for (std::size_t i = 0; i < dirs.size() && !ring.empty(); ++i)
    ring = planar::clip(ring, planar::Point(dirs[i][0], dirs[i][1]), h[i], eps);
  if (ring.empty()) throw ValidationError("sublinear", "support samples define an empty region");

  std::vector<Vector> pts;
  for (const auto& p : ring) pts.emplace_back(Vector{{p.x(), p.y()}});
  return make_body(2, std::move(pts), 0.0);
}

}  // namespace fuzzvec::geometry
