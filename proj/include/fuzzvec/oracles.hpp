#pragma once

// Brute-force oracles and seeded random generators used to cross-check the
// exact kernels. Nothing here calls into the mares module: profiles and
// skewness are recomputed from scratch with the geometry kernel only.

#include "fuzzvec/fuzzy.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace fuzzvec::oracles {

using fuzzy::AlphaGrid;
using fuzzy::FuzzyVector;
using fuzzy::Mode;
using fuzzy::RadiusProfile;
using geometry::ConvexBody;
using geometry::Direction;
using geometry::Vector;

/// Every agreement tolerance used by the property suites.
struct OracleConfig {
  double additivity_tol = 1e-10;       ///< support of a sum vs sum of supports
  double projection_slack = 1e-8;      ///< non-expansiveness and idempotence
  double membership_tol = 1e-8;        ///< containment vs support dominance
  double constant_support_tol = 1e-10; ///< ball <=> constant support
  double equality_tol = 1e-9;          ///< canonical equality of bodies and vectors
  double reconstruction_tol = 1e-8;    ///< decompositions and table round-trips
  double depth_tol = 1e-6;             ///< support gap vs erosion depth search
  double skew_tol = 1e-9;
  int sphere_samples = 720;            ///< dense direction count on the circle
  double search_delta = 0.25;          ///< default profile quantum
  std::size_t max_candidates = 100000; ///< default enumeration budget
};

const OracleConfig& config();

// ---------------------------------------------------------------------------
// Directions

struct DirectionSample {
  int dim = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::vector<Direction> directions;  ///< closed under negation
};

/// n = 1: {+1, -1}. n = 2: `count` uniform angles (rounded up to even)
/// plus the `include` directions. n >= 3: seeded Halton points on the
/// sphere plus `include`. Every direction's negation is added; duplicates
/// are removed.
DirectionSample direction_sample(int dim, std::size_t count, std::uint64_t seed,
                                 const std::vector<Direction>& include = {});

/// Minimum of h_A - h_B over a dense direction sample (an upper bound on
/// the true support gap).
double sampled_support_gap(const ConvexBody& a, const ConvexBody& b, const DirectionSample& sample);

// ---------------------------------------------------------------------------
// Sublinearity

/// Largest violation of h(x) + h(-x) >= 0 and of the homogeneous convexity
/// inequality |z| h(z/|z|) <= l h(x) + (1-l) h(y), z = l x + (1-l) y, over
/// all sampled pairs and l in {1/steps, ..., (steps-1)/steps}. h is
/// evaluated at the exact combined direction. Positive means violated.
double sublinearity_oracle(const std::function<double(const Direction&)>& h, const DirectionSample& sample,
                           int steps = 20);

/// Table version: every triple (x, y, z) of sampled directions with z in
/// cone{x, y} is checked, z = a x + b y, h(z) <= a h(x) + b h(y).
double sublinearity_oracle(const geometry::SupportSampleTable& table);

// ---------------------------------------------------------------------------
// Zadeh sum by raster convolution

struct RasterReport {
  double max_discrepancy = 0.0;
  double pitch = 0.0;
  std::size_t points = 0;
  Vector worst_point;
};

/// Memberships of u and v sampled on the grid [-extent, extent]^n with
/// `resolution` points per axis (odd, <= 401); the sup-min convolution over
/// grid index sums is compared with membership(add(u, v), t) at every grid
/// point. n <= 2.
RasterReport raster_membership_oracle(const FuzzyVector& u, const FuzzyVector& v, double extent, int resolution);

// ---------------------------------------------------------------------------
// Decomposition search

struct SearchBudget {
  double delta = 0.25;
  std::size_t max_candidates = 100000;
};

struct Candidate {
  RadiusProfile profile;
  FuzzyVector core;
  /// Largest symmetric profile value still removable from the core, from
  /// the oracle's own relaxation.
  double core_shift = 0.0;
  /// core_shift <= delta: skew up to the quantization.
  bool skew = false;
};

struct SearchResult {
  std::vector<Candidate> admissible;  ///< sorted lexicographically by profile
  std::size_t enumerated = 0;
  bool budget_exceeded = false;
  /// False for LINEAR input, where only grid-linear profiles are searched.
  bool exact_domain = true;
  double delta = 0.0;
};

/// Non-increasing profiles with values in {0, delta, 2 delta, ...} and
/// profile[k] <= upper[k]; STEP grids force profile[0] == profile[1].
/// Stops after `budget.max_candidates` profiles (exceeded flag set).
std::vector<RadiusProfile> enumerate_profiles(const AlphaGrid& grid, Mode mode, const std::vector<double>& upper,
                                              const SearchBudget& budget, bool* exceeded = nullptr);

/// Enumerates quantized profiles bounded by the level radii, pruning those
/// whose eroded levels stop being nested, and keeps the ones whose core
/// passes verify_decomposition. n <= 2.
SearchResult decomposition_search_oracle(const FuzzyVector& u, const SearchBudget& budget);

/// Largest admissible symmetric profile of u by fixed-point relaxation of
/// the bound, monotonicity and nesting constraints.
std::vector<double> relaxation_max_profile(const FuzzyVector& u);

// ---------------------------------------------------------------------------
// Random inputs

/// 2-8 points in [-5, 5]^n plus a radius in [0, 2]; canonicalized.
ConvexBody random_body(int dim, std::uint64_t seed);

struct RandomFuzzyOptions {
  /// Pads are scaled by a factor in [pad_min, pad_max] times the knot step.
  double pad_min = 0.2;
  double pad_max = 1.0;
  /// Scale applied to the random top level.
  double top_scale = 1.0;
  /// No ball summands anywhere (levels are polygons / intervals).
  bool polytopal = false;
};

/// Random top level padded outward by random bodies containing the origin,
/// one pad per knot interval; `knots` is the number of knots (>= 2).
FuzzyVector random_fuzzy(int dim, std::size_t knots, Mode mode, std::uint64_t seed,
                         const RandomFuzzyOptions& options = {});

/// Random rotation (n = 2) or random orthogonal matrix (QR of a Gaussian matrix).
geometry::Matrix random_orthogonal(int dim, std::uint64_t seed);

}  // namespace fuzzvec::oracles
