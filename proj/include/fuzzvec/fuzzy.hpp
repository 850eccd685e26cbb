#pragma once

// Fuzzy vectors as nested families of convex bodies indexed by a finite
// grid of alpha knots.
//
// Two interpolation modes give the family a meaning on all of [0, 1]:
//   STEP    u_alpha = levels[k] for alpha in (alpha_{k-1}, alpha_k], and
//           u_0 = levels[0], which must equal levels[1];
//   LINEAR  u_alpha is the Minkowski-linear interpolation between the two
//           neighbouring knot levels.
// Both are left-continuous nested families, so they define valid fuzzy
// vectors whenever the knot levels are nested.

#include "fuzzvec/geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzvec::fuzzy {

using geometry::ConvexBody;
using geometry::Direction;
using geometry::Vector;

/// Knots closer than this are merged.
inline constexpr double kKnotTol = 1e-12;
/// Absolute tolerance of the membership bisection in alpha.
inline constexpr double kMembershipTol = 1e-9;

enum class Mode { Step, Linear };

std::string mode_name(Mode mode);
/// "step" or "linear"; throws InvalidArgument otherwise.
Mode parse_mode(std::string_view name);

/// Strictly increasing knots 0 = a_0 < a_1 < ... < a_m = 1, m >= 1.
class AlphaGrid {
 public:
  AlphaGrid() : knots_{0.0, 1.0} {}
  explicit AlphaGrid(std::vector<double> knots);
  /// m equal intervals.
  static AlphaGrid uniform(std::size_t intervals);

  const std::vector<double>& knots() const { return knots_; }
  std::size_t size() const { return knots_.size(); }
  double operator[](std::size_t k) const { return knots_[k]; }

  /// Index k >= 1 with alpha in (a_{k-1}, a_k]; 0 for alpha = 0.
  std::size_t interval(double alpha) const;
  /// Index of a knot within kKnotTol of alpha.
  std::optional<std::size_t> find(double alpha) const;

  bool operator==(const AlphaGrid& other) const { return knots_ == other.knots_; }

 private:
  std::vector<double> knots_;
};

/// Union of the knots, near-duplicates merged.
AlphaGrid merge_grids(const AlphaGrid& a, const AlphaGrid& b);

struct Violation {
  std::string condition;           ///< L1, L2, L4, VS1, VS2, ...
  std::string message;
  std::vector<std::size_t> knots;  ///< offending knot indices
  std::optional<Vector> direction;
  double amount = 0.0;             ///< size of the violation

  std::string witness() const;
};

struct ValidationReport {
  std::vector<Violation> violations;  ///< first entry is the primary one
  std::vector<std::string> notes;     ///< informative, never failures

  bool valid() const { return violations.empty(); }
  /// Throws ValidationError built from the first violation, if any.
  void raise() const;
};

class FuzzyVector {
 public:
  int dim() const { return levels_.front().dim(); }
  const AlphaGrid& grid() const { return grid_; }
  const std::vector<ConvexBody>& levels() const { return levels_; }
  Mode mode() const { return mode_; }

 private:
  FuzzyVector(AlphaGrid grid, std::vector<ConvexBody> levels, Mode mode)
      : grid_(std::move(grid)), levels_(std::move(levels)), mode_(mode) {}
  friend FuzzyVector make_fuzzy(AlphaGrid grid, std::vector<ConvexBody> levels, Mode mode);

  AlphaGrid grid_;
  std::vector<ConvexBody> levels_;
  Mode mode_ = Mode::Linear;
};

/// Checks, in order: (L1) one finite body per knot, common dimension;
/// (L2) nesting levels[k] within levels[k-1]; (L4) STEP right-continuity at
/// zero, levels[0] == levels[1].
ValidationReport validate_levels(const AlphaGrid& grid, const std::vector<ConvexBody>& levels, Mode mode,
                                 double tol = geometry::kEps);

/// Canonicalizes the bodies and validates; throws ValidationError.
FuzzyVector make_fuzzy(AlphaGrid grid, std::vector<ConvexBody> levels, Mode mode);
/// STEP vector from the levels at the positive knots; the level at 0 is a
/// copy of the first one.
FuzzyVector make_step(AlphaGrid grid, std::vector<ConvexBody> positive_levels);
FuzzyVector crisp(const Vector& point, Mode mode = Mode::Linear);

ConvexBody level_set(const FuzzyVector& u, double alpha);
/// sup{alpha : t in u_alpha}, 0 for the empty set.
double membership(const FuzzyVector& u, const Vector& t);
double support_value(const FuzzyVector& u, double alpha, const Direction& x);

struct FuzzySupportTable {
  AlphaGrid grid;
  std::vector<Direction> directions;
  std::vector<std::vector<double>> values;  ///< values[knot][direction]
};

FuzzySupportTable support_table(const FuzzyVector& u, std::vector<Direction> directions);
/// Sublinearity per knot (VS1) and monotonicity in alpha per direction
/// (VS2). All violations are listed. Continuity in alpha is a property of
/// the interpolation mode and cannot be read off a finite table; a note
/// records this.
ValidationReport validate_support_table(const FuzzySupportTable& table, double tol = geometry::kEps);
/// Per-knot halfplane reconstruction (dimension <= 2); throws
/// ValidationError on an invalid table or a non-nested result.
FuzzyVector fuzzy_from_support_table(const FuzzySupportTable& table, Mode mode);

/// Zadeh sum: levelwise Minkowski sum on the merged knot grid.
FuzzyVector add(const FuzzyVector& u, const FuzzyVector& v);

/// Re-samples u on another grid: levels[k] = u_{alpha_k} for k >= 1; the
/// level at 0 is u_0 (LINEAR) or a copy of levels[1] (STEP). Exact when
/// the target grid refines the source grid and the mode is unchanged.
FuzzyVector resample(const FuzzyVector& u, const AlphaGrid& grid, Mode mode);

/// Level sets equal at every knot of the merged grid.
bool equals(const FuzzyVector& u, const FuzzyVector& v, double tol = geometry::kEps);
/// Same grid and canonical level data within tol.
bool canonical_match(const FuzzyVector& u, const FuzzyVector& v, double tol = geometry::kEps);

// ---------------------------------------------------------------------------
// Symmetric fuzzy vectors

struct RadiusProfile {
  AlphaGrid grid;
  std::vector<double> values;
  Mode mode = Mode::Linear;

  /// Value at alpha under the mode's semantics.
  double at(double alpha) const;
};

bool is_symmetric(const FuzzyVector& u, double tol = geometry::kEps);
/// Radii of the levels; throws InvalidArgument if u is not symmetric.
RadiusProfile radius_profile(const FuzzyVector& u);
/// Levels B(values[k]); throws ValidationError("profile") on a negative or
/// increasing profile and on values[0] != values[1] in STEP mode.
FuzzyVector symmetric_from_profile(const RadiusProfile& profile, int dim);

}  // namespace fuzzvec::fuzzy
