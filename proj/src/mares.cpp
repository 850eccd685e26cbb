#include "fuzzvec/mares.hpp"

#include "fuzzvec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fuzzvec::mares {

namespace g = geometry;

namespace {

g::ConvexBody polytope_part(const g::ConvexBody& a) { return g::canonical_decompose(a).irreducible; }

double hausdorff(const g::ConvexBody& a, const g::ConvexBody& b) {
  return std::max({0.0, -g::support_gap(a, b), -g::support_gap(b, a)});
}

}  // namespace

GapMatrix gap_matrix(const FuzzyVector& u, bool on_polytope_parts, bool close) {
  const std::size_t m = u.grid().size();
  GapMatrix out{u.grid(), std::vector<std::vector<double>>(m, std::vector<double>(m, 0.0)), false, on_polytope_parts,
                true};
  std::vector<g::ConvexBody> bodies;
  for (const auto& l : u.levels()) bodies.push_back(on_polytope_parts ? polytope_part(l) : l);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      const auto est = g::support_gap_estimate(bodies[j], bodies[k]);
      double v = est.value;
      out.exact = out.exact && est.exact;
      if (!on_polytope_parts) {
        if (v < -g::kEps) {
          std::ostringstream os;
          os << "knots " << j << "," << k << " gap " << v;
          throw ValidationError("L2", "level sets are not nested", os.str());
        }
        v = std::max(v, 0.0);
      }
      out.d[j][k] = v;
    }
  }
  if (close) close_chains(out);
  return out;
}

void close_chains(GapMatrix& gm) {
  const std::size_t m = gm.d.size();
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t k = l + 1; k < m; ++k) gm.d[j][k] = std::min(gm.d[j][k], gm.d[j][l] + gm.d[l][k]);
  gm.closed = true;
}

RadiusProfile max_symmetric_profile(const FuzzyVector& u) {
  const GapMatrix gm = gap_matrix(u, false, true);
  const std::size_t m = gm.d.size();
  constexpr double inf = std::numeric_limits<double>::infinity();

  // Shortest paths: forward edge j -> k costs D[j][k], backward edge costs 0.
  std::vector<std::vector<double>> w(m, std::vector<double>(m, inf));
  for (std::size_t j = 0; j < m; ++j) {
    w[j][j] = 0.0;
    for (std::size_t k = j + 1; k < m; ++k) {
      w[j][k] = gm.d[j][k];
      w[k][j] = 0.0;
    }
  }
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) w[i][k] = std::min(w[i][k], w[i][l] + w[l][k]);

  RadiusProfile p{u.grid(), std::vector<double>(m, inf), u.mode()};
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) p.values[j] = std::min(p.values[j], u.levels()[k].radius() + w[j][k]);
  if (u.mode() == fuzzy::Mode::Step) p.values[0] = p.values[1];
  return p;
}

FuzzyVector erode_by_profile(const FuzzyVector& u, const RadiusProfile& profile) {
  std::vector<g::ConvexBody> levels;
  for (std::size_t k = 0; k < u.levels().size(); ++k) {
    const auto& l = u.levels()[k];
    const double r = l.radius() - profile.values[k];
    if (r < -g::kEps) throw InvalidArgument("erode_by_profile: profile exceeds a level radius");
    levels.push_back(g::make_body(l.dim(), l.generators(), std::max(r, 0.0)));
  }
  return fuzzy::make_fuzzy(u.grid(), std::move(levels), u.mode());
}

double level_distance(const FuzzyVector& u, const FuzzyVector& v) {
  const AlphaGrid grid = fuzzy::merge_grids(u.grid(), v.grid());
  double worst = 0.0;
  for (double a : grid.knots()) worst = std::max(worst, hausdorff(fuzzy::level_set(u, a), fuzzy::level_set(v, a)));
  return worst;
}

CoreDecomposition mares_core(const FuzzyVector& u) {
  RadiusProfile sigma = max_symmetric_profile(u);
  FuzzyVector core = erode_by_profile(u, sigma);
  const FuzzyVector sym = fuzzy::symmetric_from_profile(sigma, u.dim());
  const double residual = level_distance(fuzzy::add(core, sym), u);
  if (residual > kReconstructionTol)
    throw NumericalFailure("mares_core: core plus symmetric part does not reproduce the input");
  if (!is_skew(core)) throw NumericalFailure("mares_core: computed core is not skew");
  return CoreDecomposition{std::move(core), std::move(sigma), residual};
}

double skewness(const FuzzyVector& u) { return max_symmetric_profile(u).values.front(); }

bool is_skew(const FuzzyVector& u, double tol) {
  const double s0 = skewness(u);
  // An irreducible level at 0 admits no ball summand at all.
  if (u.levels().front().radius() <= g::kEps && s0 > tol)
    throw NumericalFailure("is_skew: irreducible level at 0 but positive symmetric part");
  return s0 <= tol;
}

EquivalenceReport mares_equivalence(const FuzzyVector& u, const FuzzyVector& v, double tol) {
  if (u.dim() != v.dim()) throw InvalidArgument("mares_equivalence: dimension mismatch");
  if (u.mode() != v.mode()) throw InvalidArgument("mares_equivalence: interpolation modes differ");
  const AlphaGrid grid = fuzzy::merge_grids(u.grid(), v.grid());
  EquivalenceReport report;
  for (double a : grid.knots()) {
    const auto pu = polytope_part(fuzzy::level_set(u, a));
    const auto pv = polytope_part(fuzzy::level_set(v, a));
    const auto guv = g::support_gap_estimate(pu, pv);
    const auto gvu = g::support_gap_estimate(pv, pu);
    if (guv.value < -tol || gvu.value < -tol) {
      report.equivalent = false;
      report.alpha = a;
      // h_u - h_v at the witness direction.
      if (guv.value <= gvu.value) {
        report.direction = guv.direction;
        report.amount = guv.value;
      } else {
        report.direction = gvu.direction;
        report.amount = -gvu.value;
      }
      return report;
    }
  }
  return report;
}

bool mares_equivalent(const FuzzyVector& u, const FuzzyVector& v, double tol) {
  return mares_equivalence(u, v, tol).equivalent;
}

RadiusProfile class_minimum_profile(const FuzzyVector& u) {
  const GapMatrix gm = gap_matrix(u, true, true);
  const std::size_t m = gm.d.size();
  RadiusProfile p{u.grid(), std::vector<double>(m, 0.0), u.mode()};
  for (std::size_t j = m; j-- > 0;)
    for (std::size_t k = j + 1; k < m; ++k) p.values[j] = std::max(p.values[j], p.values[k] - gm.d[j][k]);
  if (u.mode() == fuzzy::Mode::Step) p.values[0] = p.values[1];
  return p;
}

FuzzyVector class_minimum(const FuzzyVector& u) {
  const RadiusProfile rho = class_minimum_profile(u);
  std::vector<g::ConvexBody> levels;
  for (std::size_t k = 0; k < u.levels().size(); ++k) {
    const auto& l = u.levels()[k];
    if (rho.values[k] > l.radius() + g::kEps)
      throw NumericalFailure("class_minimum: minimal profile exceeds a level radius");
    levels.push_back(g::make_body(l.dim(), l.generators(), std::min(rho.values[k], l.radius())));
  }
  FuzzyVector k_u = fuzzy::make_fuzzy(u.grid(), std::move(levels), u.mode());
  if (!mares_equivalent(k_u, u)) throw NumericalFailure("class_minimum: result is not equivalent to the input");
  if (!is_skew(k_u)) throw NumericalFailure("class_minimum: result is not skew");
  return k_u;
}

bool verify_decomposition(const FuzzyVector& u, const FuzzyVector& v, const FuzzyVector& w, double tol) {
  if (!fuzzy::is_symmetric(w)) return false;
  return fuzzy::equals(fuzzy::add(v, w), u, tol);
}

}  // namespace fuzzvec::mares
