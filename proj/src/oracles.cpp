#include "fuzzvec/oracles.hpp"

#include "fuzzvec/errors.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace fuzzvec::oracles {

namespace g = geometry;

const OracleConfig& config() {
  static const OracleConfig c;
  return c;
}

// ---------------------------------------------------------------------------
// Directions

namespace {

constexpr std::array<int, 12> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

double radical_inverse(std::uint64_t i, int base) {
  double f = 1.0;
  double r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
    i /= static_cast<std::uint64_t>(base);
  }
  return r;
}

void add_unique(std::vector<Direction>& out, const Direction& d) {
  for (const auto& e : out)
    if ((e.vec() - d.vec()).norm() <= 1e-12) return;
  out.push_back(d);
}

}  // namespace

DirectionSample direction_sample(int dim, std::size_t count, std::uint64_t seed, const std::vector<Direction>& include) {
  if (dim < 1) throw InvalidArgument("direction_sample: dimension must be positive");
  DirectionSample s{dim, count, seed, {}};
  std::vector<Direction> base;
  if (dim == 1) {
    base = {Direction::axis(1, 0, 1.0), Direction::axis(1, 0, -1.0)};
  } else if (dim == 2) {
    const std::size_t even = count + (count % 2);
    base = g::circle_directions(static_cast<int>(std::max<std::size_t>(even, 2)));
  } else {
    if (static_cast<std::size_t>(dim) > kPrimes.size()) throw Unsupported("direction_sample: dimension too large");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> shift(static_cast<std::size_t>(dim));
    for (auto& x : shift) x = unit(rng);
    for (std::uint64_t i = 1; base.size() < count; ++i) {
      Vector v(dim);
      for (int d = 0; d < dim; ++d) {
        double c = radical_inverse(i, kPrimes[static_cast<std::size_t>(d)]) + shift[static_cast<std::size_t>(d)];
        c -= std::floor(c);
        v[d] = 2.0 * c - 1.0;
      }
      const double r = v.norm();
      if (r > 1.0 || r < 1e-3) continue;
      base.push_back(Direction::normalized(v));
    }
  }
  for (const auto& d : include)
    if (d.dim() != dim) throw InvalidArgument("direction_sample: included direction has the wrong dimension");
  if (dim == 2) {
    // Uniform angles are spread; a linear duplicate scan is only needed for
    // the extra directions.
    s.directions = base;
    for (const auto& d : include) {
      add_unique(s.directions, d);
      add_unique(s.directions, -d);
    }
  } else {
    for (const auto& d : base) {
      add_unique(s.directions, d);
      add_unique(s.directions, -d);
    }
    for (const auto& d : include) {
      add_unique(s.directions, d);
      add_unique(s.directions, -d);
    }
  }
  return s;
}

double sampled_support_gap(const ConvexBody& a, const ConvexBody& b, const DirectionSample& sample) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& d : sample.directions) best = std::min(best, g::support(a, d) - g::support(b, d));
  return best;
}

// ---------------------------------------------------------------------------
// Sublinearity

double sublinearity_oracle(const std::function<double(const Direction&)>& h, const DirectionSample& sample, int steps) {
  const auto& dirs = sample.directions;
  std::vector<double> hv;
  hv.reserve(dirs.size());
  for (const auto& d : dirs) hv.push_back(h(d));
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    worst = std::max(worst, -(hv[i] + h(-dirs[i])));
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      for (int s = 1; s < steps; ++s) {
        const double l = static_cast<double>(s) / steps;
        const Vector z = l * dirs[i].vec() + (1.0 - l) * dirs[j].vec();
        const double nz = z.norm();
        if (nz < 1e-12) continue;
        const double lhs = nz * h(Direction::normalized(z));
        worst = std::max(worst, lhs - (l * hv[i] + (1.0 - l) * hv[j]));
      }
    }
  }
  return worst;
}

double sublinearity_oracle(const g::SupportSampleTable& table) {
  const auto& dirs = table.directions;
  const auto& h = table.values;
  const std::size_t m = dirs.size();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if ((dirs[i].vec() + dirs[j].vec()).norm() <= 1e-12) worst = std::max(worst, -(h[i] + h[j]));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Vector& x = dirs[i].vec();
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector& y = dirs[j].vec();
      const double c = x.dot(y);
      const double det = 1.0 - c * c;
      if (det <= 1e-12) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        const Vector& z = dirs[k].vec();
        const double a = (z.dot(x) - c * z.dot(y)) / det;
        const double b = (z.dot(y) - c * z.dot(x)) / det;
        if (a < 0.0 || b < 0.0) continue;
        if ((z - a * x - b * y).norm() > 1e-9) continue;
        worst = std::max(worst, h[k] - (a * h[i] + b * h[j]));
      }
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Raster convolution

RasterReport raster_membership_oracle(const FuzzyVector& u, const FuzzyVector& v, double extent, int resolution) {
  const int n = u.dim();
  if (n != v.dim()) throw InvalidArgument("raster oracle: dimension mismatch");
  if (n > 2) throw Unsupported("raster oracle: dimension >= 3");
  if (resolution < 3 || resolution > 401 || resolution % 2 == 0)
    throw InvalidArgument("raster oracle: resolution must be odd and at most 401");
  if (!(extent > 0.0)) throw InvalidArgument("raster oracle: extent must be positive");

  const FuzzyVector sum = fuzzy::add(u, v);
  const int r = resolution;
  const int half = (r - 1) / 2;
  const double pitch = 2.0 * extent / (r - 1);
  auto coord = [&](int i) { return -extent + pitch * i; };
  const std::size_t total = n == 1 ? static_cast<std::size_t>(r) : static_cast<std::size_t>(r) * r;
  auto point = [&](std::size_t idx) {
    Vector t(n);
    if (n == 1) t[0] = coord(static_cast<int>(idx));
    else {
      t[0] = coord(static_cast<int>(idx % r));
      t[1] = coord(static_cast<int>(idx / r));
    }
    return t;
  };

  std::vector<double> mu(total);
  std::vector<double> mv(total);
  for (std::size_t i = 0; i < total; ++i) {
    const Vector t = point(i);
    mu[i] = fuzzy::membership(u, t);
    mv[i] = fuzzy::membership(v, t);
  }
  // Only nonzero memberships can contribute to the supremum.
  std::vector<std::size_t> support_u;
  for (std::size_t i = 0; i < total; ++i)
    if (mu[i] > 0.0) support_u.push_back(i);

  RasterReport report;
  report.pitch = pitch;
  report.points = total;
  report.worst_point = point(0);
  for (std::size_t q = 0; q < total; ++q) {
    const int qx = static_cast<int>(n == 1 ? q : q % r);
    const int qy = n == 1 ? 0 : static_cast<int>(q / r);
    double conv = 0.0;
    for (std::size_t i : support_u) {
      if (mu[i] <= conv) continue;
      const int ix = static_cast<int>(n == 1 ? i : i % r);
      const int iy = n == 1 ? 0 : static_cast<int>(i / r);
      const int sx = qx + half - ix;
      const int sy = n == 1 ? 0 : qy + half - iy;
      if (sx < 0 || sx >= r || sy < 0 || sy >= r) continue;
      const std::size_t s = n == 1 ? static_cast<std::size_t>(sx) : static_cast<std::size_t>(sy) * r + sx;
      conv = std::max(conv, std::min(mu[i], mv[s]));
    }
    const double exact = fuzzy::membership(sum, point(q));
    const double diff = std::abs(exact - conv);
    if (diff > report.max_discrepancy) {
      report.max_discrepancy = diff;
      report.worst_point = point(q);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Decomposition search

std::vector<RadiusProfile> enumerate_profiles(const AlphaGrid& grid, Mode mode, const std::vector<double>& upper,
                                              const SearchBudget& budget, bool* exceeded) {
  if (!(budget.delta > 0.0)) throw InvalidArgument("enumerate_profiles: delta must be positive");
  if (upper.size() != grid.size()) throw InvalidArgument("enumerate_profiles: one bound per knot is required");
  const std::size_t m = grid.size();
  std::vector<long> cap(m);
  for (std::size_t k = 0; k < m; ++k) cap[k] = static_cast<long>(std::floor(upper[k] / budget.delta + 1e-9));

  std::vector<RadiusProfile> out;
  std::vector<long> cur(m, 0);
  bool over = false;
  auto rec = [&](auto&& self, std::size_t k, long prev) -> void {
    if (over) return;
    if (k == m) {
      if (out.size() >= budget.max_candidates) {
        over = true;
        return;
      }
      RadiusProfile p{grid, std::vector<double>(m), mode};
      for (std::size_t i = 0; i < m; ++i) p.values[i] = static_cast<double>(cur[i]) * budget.delta;
      out.push_back(std::move(p));
      return;
    }
    long hi = std::min(prev, cap[k]);
    long lo = 0;
    if (mode == Mode::Step && k == 1) lo = hi = cur[0];
    if (hi > cap[k]) return;
    for (long v = lo; v <= hi; ++v) {
      cur[k] = v;
      self(self, k + 1, v);
    }
  };
  rec(rec, 0, cap[0]);
  if (exceeded) *exceeded = over;
  return out;
}

std::vector<double> relaxation_max_profile(const FuzzyVector& u) {
  const auto& levels = u.levels();
  const std::size_t m = levels.size();
  std::vector<std::vector<double>> d(m, std::vector<double>(m, 0.0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) d[j][k] = std::max(0.0, g::support_gap(levels[j], levels[k]));
  std::vector<double> s(m);
  for (std::size_t k = 0; k < m; ++k) s[k] = levels[k].radius();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (s[k] > s[j]) {
          s[k] = s[j];
          changed = true;
        }
        if (s[j] > s[k] + d[j][k]) {
          s[j] = s[k] + d[j][k];
          changed = true;
        }
      }
    }
  }
  return s;
}

SearchResult decomposition_search_oracle(const FuzzyVector& u, const SearchBudget& budget) {
  if (u.dim() > 2) throw Unsupported("decomposition search: dimension >= 3");
  if (!(budget.delta > 0.0)) throw InvalidArgument("decomposition search: delta must be positive");
  SearchResult result;
  result.exact_domain = u.mode() == Mode::Step;
  result.delta = budget.delta;

  const auto& levels = u.levels();
  const std::size_t m = levels.size();
  std::vector<long> cap(m);
  for (std::size_t k = 0; k < m; ++k) cap[k] = static_cast<long>(std::floor(levels[k].radius() / budget.delta + 1e-9));

  std::vector<long> cur(m, 0);
  std::vector<ConvexBody> eroded;
  eroded.reserve(m);
  auto rec = [&](auto&& self, std::size_t k, long prev) -> void {
    if (result.budget_exceeded) return;
    if (k == m) {
      if (result.enumerated >= budget.max_candidates) {
        result.budget_exceeded = true;
        return;
      }
      ++result.enumerated;
      RadiusProfile p{u.grid(), std::vector<double>(m), u.mode()};
      for (std::size_t i = 0; i < m; ++i) p.values[i] = static_cast<double>(cur[i]) * budget.delta;
      FuzzyVector core = fuzzy::make_fuzzy(u.grid(), eroded, u.mode());
      const FuzzyVector w = fuzzy::symmetric_from_profile(p, u.dim());
      if (!(fuzzy::is_symmetric(w) && fuzzy::equals(fuzzy::add(core, w), u, config().reconstruction_tol))) return;
      const double shift = relaxation_max_profile(core).front();
      result.admissible.push_back(Candidate{std::move(p), std::move(core), shift, shift <= budget.delta + 1e-9});
      return;
    }
    long hi = std::min(prev, cap[k]);
    long lo = 0;
    if (u.mode() == Mode::Step && k == 1) {
      if (cur[0] > cap[1]) return;
      lo = hi = cur[0];
    }
    for (long v = hi; v >= lo; --v) {
      cur[k] = v;
      const auto& l = levels[k];
      ConvexBody e = g::make_body(l.dim(), l.generators(), std::max(0.0, l.radius() - v * budget.delta));
      // Eroded levels must stay nested; smaller values at this knot only
      // enlarge the level, so later values may still pass.
      if (k > 0 && !g::includes(eroded.back(), e, config().equality_tol)) continue;
      eroded.push_back(std::move(e));
      self(self, k + 1, v);
      eroded.pop_back();
      if (result.budget_exceeded) return;
    }
  };
  rec(rec, 0, cap[0]);
  std::sort(result.admissible.begin(), result.admissible.end(),
            [](const Candidate& a, const Candidate& b) { return a.profile.values < b.profile.values; });
  return result;
}

// ---------------------------------------------------------------------------
// Random inputs

ConvexBody random_body(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(2, 8);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_real_distribution<double> rad(0.0, 2.0);
  const int m = count(rng);
  std::vector<Vector> pts;
  for (int i = 0; i < m; ++i) {
    Vector p(dim);
    for (int d = 0; d < dim; ++d) p[d] = coord(rng);
    pts.push_back(p);
  }
  return g::make_body(dim, std::move(pts), rad(rng));
}

FuzzyVector random_fuzzy(int dim, std::size_t knots, Mode mode, std::uint64_t seed, const RandomFuzzyOptions& opt) {
  if (knots < 2) throw InvalidArgument("random_fuzzy: at least two knots are required");
  if (mode == Mode::Step && knots < 3) throw InvalidArgument("random_fuzzy: step vectors need at least three knots");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<double> k{0.0};
  for (std::size_t i = 1; i + 1 < knots; ++i) k.push_back(0.0);
  k.push_back(1.0);
  // Interior knots: sorted uniform draws, redrawn until well separated.
  while (knots > 2) {
    for (std::size_t i = 1; i + 1 < knots; ++i) k[i] = 0.05 + 0.9 * unit(rng);
    std::sort(k.begin(), k.end());
    bool ok = true;
    for (std::size_t i = 1; i < knots; ++i) ok = ok && k[i] - k[i - 1] >= 0.02;
    if (ok) break;
  }
  const AlphaGrid grid(k);

  ConvexBody top = g::scale(random_body(dim, rng()), opt.top_scale);
  if (opt.polytopal) top = g::make_body(dim, top.generators(), 0.0);

  std::vector<ConvexBody> levels(knots, top);
  const std::size_t first = mode == Mode::Step ? 2 : 1;
  for (std::size_t i = knots - 1; i >= first; --i) {
    const double s = (opt.pad_min + (opt.pad_max - opt.pad_min) * unit(rng)) * (k[i] - k[i - 1]);
    std::vector<Vector> pts;
    for (int d = 0; d < dim; ++d) {
      for (double sign : {-1.0, 1.0}) {
        Vector e = Vector::Zero(dim);
        e[d] = sign * s * (0.5 + unit(rng));
        pts.push_back(e);
      }
    }
    const int extra = 1 + static_cast<int>(unit(rng) * 3.0);
    for (int j = 0; j < extra; ++j) {
      Vector p(dim);
      for (int d = 0; d < dim; ++d) p[d] = s * (2.0 * unit(rng) - 1.0);
      pts.push_back(p);
    }
    const double r = opt.polytopal ? 0.0 : s * unit(rng);
    levels[i - 1] = g::minkowski_sum(levels[i], g::make_body(dim, std::move(pts), r));
  }
  if (mode == Mode::Step) levels[0] = levels[1];
  return fuzzy::make_fuzzy(grid, std::move(levels), mode);
}

g::Matrix random_orthogonal(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  g::Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = gauss(rng);
  Eigen::HouseholderQR<g::Matrix> qr(a);
  g::Matrix q = qr.householderQ();
  // Fix column signs so the distribution is uniform and deterministic.
  const g::Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  return q;
}

}  // namespace fuzzvec::oracles
