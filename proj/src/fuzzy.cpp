#include "fuzzvec/fuzzy.hpp"

#include "fuzzvec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fuzzvec::fuzzy {

namespace g = geometry;

namespace {

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

ConvexBody canonical(const ConvexBody& a) {
  return a.canonical() ? a : g::make_body(a.dim(), a.generators(), a.radius());
}

ConvexBody interpolate(const ConvexBody& lower, const ConvexBody& upper, double w) {
  if (w <= 0.0) return lower;
  if (w >= 1.0) return upper;
  return g::minkowski_sum(g::scale(lower, 1.0 - w), g::scale(upper, w));
}

}  // namespace

std::string mode_name(Mode mode) { return mode == Mode::Step ? "step" : "linear"; }

Mode parse_mode(std::string_view name) {
  if (name == "step") return Mode::Step;
  if (name == "linear") return Mode::Linear;
  throw InvalidArgument("unknown mode '" + std::string(name) + "' (expected step or linear)");
}

// ---------------------------------------------------------------------------
// AlphaGrid

AlphaGrid::AlphaGrid(std::vector<double> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw InvalidArgument("alpha grid needs at least the knots 0 and 1");
  if (knots_.front() != 0.0 || knots_.back() != 1.0) throw InvalidArgument("alpha grid must start at 0 and end at 1");
  for (std::size_t k = 1; k < knots_.size(); ++k)
    if (!(knots_[k] > knots_[k - 1])) throw InvalidArgument("alpha grid knots must be strictly increasing");
}

AlphaGrid AlphaGrid::uniform(std::size_t intervals) {
  if (intervals == 0) throw InvalidArgument("alpha grid needs at least one interval");
  std::vector<double> k(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) k[i] = static_cast<double>(i) / static_cast<double>(intervals);
  k.back() = 1.0;
  return AlphaGrid(std::move(k));
}

std::size_t AlphaGrid::interval(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha outside [0, 1]");
  if (alpha == 0.0) return 0;
  const auto it = std::lower_bound(knots_.begin(), knots_.end(), alpha);
  return static_cast<std::size_t>(it - knots_.begin());
}

std::optional<std::size_t> AlphaGrid::find(double alpha) const {
  const auto it = std::lower_bound(knots_.begin(), knots_.end(), alpha - kKnotTol);
  if (it != knots_.end() && std::abs(*it - alpha) <= kKnotTol) return static_cast<std::size_t>(it - knots_.begin());
  return std::nullopt;
}

AlphaGrid merge_grids(const AlphaGrid& a, const AlphaGrid& b) {
  std::vector<double> all(a.knots());
  all.insert(all.end(), b.knots().begin(), b.knots().end());
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double k : all)
    if (out.empty() || k - out.back() > kKnotTol) out.push_back(k);
  out.back() = 1.0;
  return AlphaGrid(std::move(out));
}

// ---------------------------------------------------------------------------
// Validation

std::string Violation::witness() const {
  std::ostringstream os;
  os << condition;
  if (!knots.empty()) {
    os << " knots";
    for (std::size_t i = 0; i < knots.size(); ++i) os << (i ? "," : " ") << knots[i];
  }
  if (direction) os << " direction " << format_vector(*direction);
  os.precision(17);
  os << " amount " << amount;
  return os.str();
}

void ValidationReport::raise() const {
  if (violations.empty()) return;
  const auto& v = violations.front();
  throw ValidationError(v.condition, v.message, v.witness());
}

ValidationReport validate_levels(const AlphaGrid& grid, const std::vector<ConvexBody>& levels, Mode mode,
                                 double tol) {
  ValidationReport report;
  if (levels.size() != grid.size()) {
    report.violations.push_back({"L1", "one level body per knot is required", {}, std::nullopt, 0.0});
    return report;
  }
  const int n = levels.front().dim();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    bool finite = std::isfinite(levels[k].radius()) && levels[k].radius() >= 0.0;
    for (const auto& p : levels[k].generators()) finite = finite && p.allFinite();
    if (levels[k].dim() != n || levels[k].generators().empty() || !finite) {
      report.violations.push_back({"L1", "level is not a convex body of the common dimension", {k}, std::nullopt, 0.0});
      return report;
    }
  }
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const auto gap = g::support_gap_estimate(levels[k - 1], levels[k]);
    if (gap.value < -tol) {
      report.violations.push_back({"L2", "level sets are not nested: a higher level leaves a lower one",
                                   {k - 1, k}, gap.direction, -gap.value});
      return report;
    }
  }
  if (mode == Mode::Step && !g::equals(levels[0], levels[1], tol)) {
    const auto gap = g::support_gap_estimate(levels[1], levels[0]);
    report.violations.push_back(
        {"L4", "step mode requires the level at 0 to equal the first positive level", {0, 1}, gap.direction, -gap.value});
  }
  return report;
}

FuzzyVector make_fuzzy(AlphaGrid grid, std::vector<ConvexBody> levels, Mode mode) {
  if (levels.empty()) throw ValidationError("L1", "no level bodies");
  for (auto& l : levels) l = canonical(l);
  validate_levels(grid, levels, mode).raise();
  return FuzzyVector(std::move(grid), std::move(levels), mode);
}

FuzzyVector make_step(AlphaGrid grid, std::vector<ConvexBody> positive_levels) {
  if (positive_levels.empty()) throw ValidationError("L1", "no level bodies");
  positive_levels.insert(positive_levels.begin(), positive_levels.front());
  return make_fuzzy(std::move(grid), std::move(positive_levels), Mode::Step);
}

FuzzyVector crisp(const Vector& point, Mode mode) {
  const auto p = g::point_body(point);
  return make_fuzzy(AlphaGrid(), {p, p}, mode);
}

// ---------------------------------------------------------------------------
// Levels and membership

ConvexBody level_set(const FuzzyVector& u, double alpha) {
  const std::size_t k = u.grid().interval(alpha);
  if (k == 0 || u.mode() == Mode::Step || alpha == u.grid()[k]) return u.levels()[k];
  const double lo = u.grid()[k - 1];
  const double hi = u.grid()[k];
  return interpolate(u.levels()[k - 1], u.levels()[k], (alpha - lo) / (hi - lo));
}

double membership(const FuzzyVector& u, const Vector& t) {
  if (t.size() != u.dim()) throw InvalidArgument("membership: dimension mismatch");
  const auto& levels = u.levels();
  const auto& knots = u.grid().knots();
  std::size_t top = levels.size();
  for (std::size_t k = levels.size(); k-- > 0;) {
    if (g::contains(levels[k], t)) {
      top = k;
      break;
    }
  }
  if (top == levels.size()) return 0.0;
  if (u.mode() == Mode::Step || top + 1 == levels.size()) return knots[top];

  // t is in u_alpha for alpha = a_top and not for a_{top+1}; the levels
  // shrink continuously in between.
  double lo = knots[top];
  double hi = knots[top + 1];
  const double span = hi - lo;
  while (hi - lo > kMembershipTol) {
    const double mid = 0.5 * (lo + hi);
    if (g::contains(interpolate(levels[top], levels[top + 1], (mid - knots[top]) / span), t)) lo = mid;
    else hi = mid;
  }
  return lo;
}

double support_value(const FuzzyVector& u, double alpha, const Direction& x) {
  const std::size_t k = u.grid().interval(alpha);
  if (k == 0 || u.mode() == Mode::Step || alpha == u.grid()[k]) return g::support(u.levels()[k], x);
  const double w = (alpha - u.grid()[k - 1]) / (u.grid()[k] - u.grid()[k - 1]);
  return (1.0 - w) * g::support(u.levels()[k - 1], x) + w * g::support(u.levels()[k], x);
}

// ---------------------------------------------------------------------------
// Support tables

FuzzySupportTable support_table(const FuzzyVector& u, std::vector<Direction> directions) {
  FuzzySupportTable table{u.grid(), std::move(directions), {}};
  for (const auto& level : u.levels()) {
    std::vector<double> row;
    row.reserve(table.directions.size());
    for (const auto& d : table.directions) row.push_back(g::support(level, d));
    table.values.push_back(std::move(row));
  }
  return table;
}

ValidationReport validate_support_table(const FuzzySupportTable& table, double tol) {
  if (table.values.size() != table.grid.size()) throw InvalidArgument("support table: one row per knot is required");
  for (const auto& row : table.values)
    if (row.size() != table.directions.size()) throw InvalidArgument("support table: ragged rows");

  ValidationReport report;
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    const auto r = g::check_sublinear({table.directions, table.values[k]}, tol);
    if (!r.valid) {
      const auto& w = *r.witness;
      const char* what = w.kind == g::SublinearityViolation::Kind::Antipodal ? "h(x) + h(-x) < 0"
                                                                              : "two-point convexity fails";
      report.violations.push_back({"VS1", std::string("level is not sublinear: ") + what, {k}, w.x, w.amount});
    }
  }
  for (std::size_t i = 0; i < table.directions.size(); ++i) {
    for (std::size_t k = 1; k < table.values.size(); ++k) {
      const double rise = table.values[k][i] - table.values[k - 1][i];
      if (rise > tol)
        report.violations.push_back({"VS2", "support value increases with alpha", {k - 1, k},
                                     table.directions[i].vec(), rise});
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.condition < b.condition; });
  report.notes.push_back(
      "continuity in alpha is certified only for the interpolation mode's semantics, not by the sampled table");
  return report;
}

FuzzyVector fuzzy_from_support_table(const FuzzySupportTable& table, Mode mode) {
  validate_support_table(table).raise();
  std::vector<ConvexBody> levels;
  for (const auto& row : table.values) levels.push_back(g::body_from_support_samples({table.directions, row}));
  return make_fuzzy(table.grid, std::move(levels), mode);
}

// ---------------------------------------------------------------------------
// Arithmetic

FuzzyVector add(const FuzzyVector& u, const FuzzyVector& v) {
  if (u.dim() != v.dim()) throw InvalidArgument("add: dimension mismatch");
  if (u.mode() != v.mode()) throw InvalidArgument("add: interpolation modes differ; resample one operand first");
  const AlphaGrid grid = merge_grids(u.grid(), v.grid());
  std::vector<ConvexBody> levels;
  levels.reserve(grid.size());
  for (double a : grid.knots()) levels.push_back(g::minkowski_sum(level_set(u, a), level_set(v, a)));
  return make_fuzzy(grid, std::move(levels), u.mode());
}

FuzzyVector resample(const FuzzyVector& u, const AlphaGrid& grid, Mode mode) {
  std::vector<ConvexBody> levels;
  for (double a : grid.knots()) levels.push_back(level_set(u, a));
  if (mode == Mode::Step) levels[0] = levels[1];
  return make_fuzzy(grid, std::move(levels), mode);
}

bool equals(const FuzzyVector& u, const FuzzyVector& v, double tol) {
  if (u.dim() != v.dim() || u.mode() != v.mode()) return false;
  const AlphaGrid grid = merge_grids(u.grid(), v.grid());
  for (double a : grid.knots())
    if (!g::equals(level_set(u, a), level_set(v, a), tol)) return false;
  return true;
}

bool canonical_match(const FuzzyVector& u, const FuzzyVector& v, double tol) {
  if (u.dim() != v.dim() || u.mode() != v.mode() || u.grid().size() != v.grid().size()) return false;
  for (std::size_t k = 0; k < u.grid().size(); ++k) {
    if (std::abs(u.grid()[k] - v.grid()[k]) > tol) return false;
    if (!g::canonical_match(u.levels()[k], v.levels()[k], tol)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Symmetric vectors

double RadiusProfile::at(double alpha) const {
  const std::size_t k = grid.interval(alpha);
  if (k == 0 || mode == Mode::Step || alpha == grid[k]) return values[k];
  const double w = (alpha - grid[k - 1]) / (grid[k] - grid[k - 1]);
  return (1.0 - w) * values[k - 1] + w * values[k];
}

bool is_symmetric(const FuzzyVector& u, double tol) {
  return std::all_of(u.levels().begin(), u.levels().end(), [&](const ConvexBody& l) { return g::is_ball(l, tol); });
}

RadiusProfile radius_profile(const FuzzyVector& u) {
  if (!is_symmetric(u)) throw InvalidArgument("radius_profile: fuzzy vector is not symmetric");
  RadiusProfile p{u.grid(), {}, u.mode()};
  for (const auto& l : u.levels()) p.values.push_back(l.radius());
  return p;
}

FuzzyVector symmetric_from_profile(const RadiusProfile& profile, int dim) {
  const auto& r = profile.values;
  if (r.size() != profile.grid.size()) throw InvalidArgument("profile: one value per knot is required");
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!(r[k] >= 0.0) || !std::isfinite(r[k]))
      throw ValidationError("profile", "profile value is negative", "knot " + std::to_string(k));
    if (k > 0 && r[k] > r[k - 1])
      throw ValidationError("profile", "profile increases across knots",
                            "knots " + std::to_string(k - 1) + "," + std::to_string(k));
  }
  if (profile.mode == Mode::Step && r[0] != r[1])
    throw ValidationError("profile", "step profile must take the same value at 0 and the first positive knot",
                          "knots 0,1");
  std::vector<ConvexBody> levels;
  for (double v : r) levels.push_back(g::ball(dim, v));
  return make_fuzzy(profile.grid, std::move(levels), profile.mode);
}

}  // namespace fuzzvec::fuzzy
