#pragma once

// Symmetric parts, Mares cores, skewness, Mares equivalence and class
// minima of fuzzy vectors, computed as difference-constraint problems over
// the knot grid.
//
// A decomposition u = v + w with w symmetric (levels B(s_k)) is possible
// exactly when the radius profile s satisfies
//   (a) 0 <= s_k <= lambda_k       (regular erosion of level k),
//   (b) s non-increasing,
//   (c) s_j - s_k <= D[j][k]       (j < k, nesting of the eroded levels),
// where lambda_k is the ball radius of level k and D the support-gap matrix
// of the levels. The largest such profile yields the canonical core.
//
// In STEP mode the knot problem is the whole problem. In LINEAR mode the
// profiles are restricted to be linear between knots; refining the grid can
// only increase the result.

#include "fuzzvec/fuzzy.hpp"

#include <optional>
#include <vector>

namespace fuzzvec::mares {

using fuzzy::AlphaGrid;
using fuzzy::FuzzyVector;
using fuzzy::RadiusProfile;
using geometry::Vector;

inline constexpr double kSkewTol = 1e-9;
inline constexpr double kReconstructionTol = 1e-8;

struct GapMatrix {
  AlphaGrid grid;
  /// D[j][k] for j < k; entries with j >= k are 0 and unused.
  std::vector<std::vector<double>> d;
  bool closed = false;
  bool on_polytope_parts = false;
  /// False when some entry is a certified lower bound (dimension >= 3).
  bool exact = true;
};

/// Pairwise support gaps between knot levels (or between their polytope
/// parts). The full-body matrix of a nested vector is nonnegative; tiny
/// negative round-off is clipped to 0 and anything below -kEps is rejected.
GapMatrix gap_matrix(const FuzzyVector& u, bool on_polytope_parts, bool close = true);

/// Min-plus closure over increasing chains: D[j][k] = min(D[j][k], D[j][l] + D[l][k]).
void close_chains(GapMatrix& g);

/// The largest radius profile satisfying (a)-(c).
RadiusProfile max_symmetric_profile(const FuzzyVector& u);

struct CoreDecomposition {
  FuzzyVector core;
  RadiusProfile profile;
  double residual = 0.0;  ///< Hausdorff distance of core + symmetric part to u, max over knots
};

/// Core levels are the knot levels with radius reduced by the maximal
/// profile. Throws NumericalFailure if the reconstruction or the skewness
/// of the core fails to verify.
CoreDecomposition mares_core(const FuzzyVector& u);

/// Value of the maximal symmetric profile at alpha = 0 (its maximum).
double skewness(const FuzzyVector& u);
bool is_skew(const FuzzyVector& u, double tol = kSkewTol);

struct EquivalenceReport {
  bool equivalent = true;
  std::optional<double> alpha;       ///< witness knot on failure
  std::optional<Vector> direction;   ///< direction separating the polytope parts
  double amount = 0.0;               ///< h_u - h_v in that direction
};

/// Equality of the polytope parts of the two vectors at every merged knot.
EquivalenceReport mares_equivalence(const FuzzyVector& u, const FuzzyVector& v, double tol = geometry::kEps);
bool mares_equivalent(const FuzzyVector& u, const FuzzyVector& v, double tol = geometry::kEps);

/// Smallest radius profile r with P_k + B(r_k) nested: r_j = max(0, max_{k>j} (r_k - G[j][k])).
RadiusProfile class_minimum_profile(const FuzzyVector& u);
/// Levels P_k + B(r_k). Verifies equivalence to u, support domination and
/// skewness; throws NumericalFailure otherwise.
FuzzyVector class_minimum(const FuzzyVector& u);

/// w symmetric and v + w equal to u.
bool verify_decomposition(const FuzzyVector& u, const FuzzyVector& v, const FuzzyVector& w,
                          double tol = kReconstructionTol);

/// Levels of u with radii reduced by the profile (which must not exceed the
/// radii); the candidate core for that symmetric part.
FuzzyVector erode_by_profile(const FuzzyVector& u, const RadiusProfile& profile);

/// max over knots of the Hausdorff distance between the level sets.
double level_distance(const FuzzyVector& u, const FuzzyVector& v);

}  // namespace fuzzvec::mares
