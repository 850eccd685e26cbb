#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzvec/errors.hpp"
#include "fuzzvec/examples.hpp"
#include "fuzzvec/geometry.hpp"
#include "fuzzvec/oracles.hpp"
#include "helpers.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace fuzzvec;
using namespace fuzzvec::geometry;
using testing::near;
using testing::near_vec;
using testing::v1;
using testing::v2;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

ConvexBody square() { return examples::square(1.0); }

Vector random_point(std::mt19937_64& rng, int dim, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vector p(dim);
  for (int i = 0; i < dim; ++i) p[i] = u(rng);
  return p;
}

/// Inclusion B + B(t) in A decided by erosion and projection only.
bool inclusion_by_erosion(const ConvexBody& a, const ConvexBody& b, double t) {
  const auto inner = inner_parallel_body(a, b.radius() + t);
  if (!inner) return false;
  for (const auto& g : b.generators())
    if (!contains(*inner, g, 1e-12)) return false;
  return true;
}

}  // namespace

TEST_SUITE("construction") {
  TEST_CASE("square keeps its four vertices") {
    const auto s = make_body(2, {v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1)});
    CHECK(s.canonical());
    CHECK(s.generators().size() == 4);
    CHECK(s.radius() == 0.0);
    CHECK(near_vec(s.generators().front(), v2(-1, -1)));
  }

  TEST_CASE("interior generator is dropped") {
    const auto s = make_body(2, {v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1), v2(0, 0)});
    CHECK(canonical_match(s, square()));
  }

  TEST_CASE("interval collapses to midpoint plus radius") {
    const auto i = make_body(1, {v1(0), v1(2)});
    REQUIRE(i.generators().size() == 1);
    CHECK(near(i.generators()[0][0], 1.0));
    CHECK(near(i.radius(), 1.0));
    CHECK(near(support(i, Direction::axis(1, 0, 1.0)), 2.0));
    CHECK(near(support(i, Direction::axis(1, 0, -1.0)), 0.0));
  }

  TEST_CASE("collinear and duplicate generators") {
    const auto seg = make_body(2, {v2(0, 0), v2(1, 1), v2(2, 2), v2(2, 2)});
    CHECK(seg.generators().size() == 2);
    const auto pt = make_body(3, {Vector::Ones(3), Vector::Ones(3)});
    CHECK(pt.single_generator());
  }

  TEST_CASE("extreme points in three dimensions") {
    std::vector<Vector> cube;
    for (int i = 0; i < 8; ++i) cube.push_back(Vector{{i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0}});
    cube.push_back(Vector::Zero(3));
    cube.push_back(Vector{{1.0, 0.0, 0.0}});  // face centre
    const auto c = make_body(3, cube);
    CHECK(c.generators().size() == 8);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(make_body(2, {}), InvalidArgument);
    CHECK_THROWS_AS(make_body(2, {v1(0)}), InvalidArgument);
    CHECK_THROWS_AS(make_body(2, {v2(0, 0)}, -1.0), InvalidArgument);
    CHECK_THROWS_AS(ball(2, -0.5), InvalidArgument);
    CHECK_THROWS_AS(Direction(v2(1, 1)), InvalidArgument);
    CHECK_THROWS_AS(Direction::normalized(v2(0, 0)), InvalidArgument);
  }
}

TEST_SUITE("support") {
  TEST_CASE("support values") {
    CHECK(near(support(square(), Direction::axis(2, 0)), 1.0));
    CHECK(near(support(square(), Direction::normalized(v2(1, 1))), kSqrt2));
    for (const auto& d : circle_directions(16)) CHECK(near(support(ball(2, 2.0), d), 2.0));
    CHECK_THROWS_AS(support(square(), Direction::axis(3, 0)), InvalidArgument);
  }

  TEST_CASE("homogeneous extension") {
    CHECK(support_homogeneous(square(), v2(0, 0)) == 0.0);
    CHECK(near(support_homogeneous(square(), v2(3, 0)), 3.0));
    CHECK(near(support_homogeneous(ball(2, 2.0), v2(0, -5)), 10.0));
  }

  TEST_CASE("support point ties pick the lexicographically smallest generator") {
    const auto p = support_point(square(), Direction::axis(2, 0));
    CHECK(near_vec(p, v2(1, -1)));
    const auto q = support_point(make_body(2, {v2(0, 0)}, 2.0), Direction::axis(2, 1));
    CHECK(near_vec(q, v2(0, 2)));
  }
}

TEST_SUITE("minkowski") {
  TEST_CASE("square plus ball") {
    const auto s = minkowski_sum(square(), ball(2, 2.0));
    CHECK(s.generators().size() == 4);
    CHECK(near(s.radius(), 2.0));
  }

  TEST_CASE("origin is the identity") {
    CHECK(canonical_match(minkowski_sum(square(), point_body(v2(0, 0))), square()));
  }

  TEST_CASE("two segments give the square") {
    const auto a = make_body(2, {v2(-1, 0), v2(1, 0)});
    const auto b = make_body(2, {v2(0, -1), v2(0, 1)});
    CHECK(canonical_match(minkowski_sum(a, b), square()));
  }

  TEST_CASE("scale and transform") {
    CHECK(canonical_match(scale(square(), 0.0), point_body(v2(0, 0))));
    CHECK_THROWS_AS(scale(square(), -1.0), InvalidArgument);
    const auto q = oracles::random_orthogonal(2, 7);
    CHECK(canonical_match(transform(ball(2, 1.5), q), ball(2, 1.5)));
    Matrix rot(2, 2);
    rot << 0, -1, 1, 0;
    CHECK(canonical_match(transform(square(), rot), square()));
    Matrix shear(2, 2);
    shear << 1, 1, 0, 1;
    CHECK_THROWS_AS(transform(square(), shear), InvalidArgument);
  }

  TEST_CASE("transform pulls back the support function") {
    const auto a = oracles::random_body(2, 11);
    const auto q = oracles::random_orthogonal(2, 12);
    const auto ta = transform(a, q);
    for (const auto& d : circle_directions(64))
      CHECK(near(support(ta, d), support(a, Direction::normalized(q.transpose() * d.vec())), 1e-10));
  }
}

TEST_SUITE("projection") {
  TEST_CASE("projection onto the square") {
    CHECK(near_vec(metric_projection(square(), v2(3, 0)), v2(1, 0)));
    CHECK(near_vec(metric_projection(square(), v2(3, 3)), v2(1, 1)));
    CHECK(near_vec(metric_projection(square(), v2(0.2, -0.3)), v2(0.2, -0.3)));
  }

  TEST_CASE("distance and containment") {
    CHECK(near(distance(square(), v2(3, 3)), 2.0 * kSqrt2));
    CHECK(contains(minkowski_sum(ball(2, 2.0), square()), v2(3, 0)));
    CHECK_FALSE(contains(square(), v2(1.1, 0), 0.0));
  }

  TEST_CASE("three-dimensional projection matches clamping onto a box") {
    std::mt19937_64 rng(5);
    const auto b = box(Vector{{-1.0, -2.0, -0.5}}, Vector{{1.0, 0.5, 2.0}});
    for (int i = 0; i < 200; ++i) {
      const Vector x = random_point(rng, 3, 4.0);
      const Vector expect = x.cwiseMax(Vector{{-1.0, -2.0, -0.5}}).cwiseMin(Vector{{1.0, 0.5, 2.0}});
      CHECK(near_vec(metric_projection(b, x), expect, 1e-9));
    }
  }

  TEST_CASE("rounded body projection") {
    const auto a = make_body(3, {Vector::Zero(3)}, 2.0);
    CHECK(near_vec(metric_projection(a, Vector{{0.0, 0.0, 5.0}}), Vector{{0.0, 0.0, 2.0}}));
  }

  TEST_CASE("Wolfe's algorithm on a simplex face") {
    const std::vector<Vector> tri{Vector{{1.0, 0.0, 0.0}}, Vector{{0.0, 1.0, 0.0}}, Vector{{0.0, 0.0, 1.0}}};
    CHECK(near_vec(detail::min_norm_point(tri), Vector::Constant(3, 1.0 / 3.0), 1e-12));
  }
}

TEST_SUITE("hyperplanes") {
  TEST_CASE("separating hyperplanes") {
    auto h = separating_support_hyperplane(square(), v2(3, 0));
    CHECK(near_vec(h.normal.vec(), v2(1, 0)));
    CHECK(near(h.offset, 1.0));
    h = separating_support_hyperplane(ball(2, 2.0), v2(0, 4));
    CHECK(near_vec(h.normal.vec(), v2(0, 1)));
    CHECK(near(h.offset, 2.0));
    h = separating_support_hyperplane(square(), v2(3, 3));
    CHECK(near_vec(h.normal.vec(), v2(1 / kSqrt2, 1 / kSqrt2)));
    CHECK(near(h.offset, kSqrt2));
    CHECK_THROWS_AS(separating_support_hyperplane(square(), v2(0.5, 0)), InvalidArgument);
  }

  TEST_CASE("support hyperplanes in a direction") {
    CHECK(near(support_hyperplane_in_direction(square(), Direction::axis(2, 0)).offset, 1.0));
    CHECK(near(support_hyperplane_in_direction(minkowski_sum(ball(2, 2.0), square()), Direction::axis(2, 0)).offset,
               3.0));
    const auto d = Direction::normalized(v2(0.3, -0.7));
    CHECK(near(support_hyperplane_in_direction(point_body(v2(2, 5)), d).offset, v2(2, 5).dot(d.vec())));
  }

  TEST_CASE("random separating hyperplanes support the body") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
      const auto a = oracles::random_body(2, 100 + i);
      const Vector x = random_point(rng, 2, 12.0);
      if (distance(a, x) <= 1e-6) continue;
      const auto h = separating_support_hyperplane(a, x);
      CHECK(near(support(a, h.normal), h.offset, 1e-9));
      CHECK(h.signed_distance(x) > 0.0);
    }
  }
}

TEST_SUITE("sublinearity") {
  TEST_CASE("sampled support function of the square is sublinear") {
    const auto table = sample_support(square(), circle_directions(360));
    CHECK(check_sublinear(table, kEps).valid);
  }

  TEST_CASE("lowering the square's support breaks sublinearity") {
    auto table = sample_support(square(), circle_directions(360));
    for (auto& v : table.values) v -= 0.5;
    CHECK_FALSE(check_sublinear(table, kEps).valid);

    // Axes and diagonals: the pair (e1, e2) at lambda 1/2 lands on the diagonal.
    auto eight = sample_support(square(), circle_directions(8));
    for (auto& v : eight.values) v -= 0.5;
    const auto r = check_sublinear(eight, kEps);
    REQUIRE_FALSE(r.valid);
    CHECK(near(r.worst, kSqrt2 / 2.0 - 0.5, 1e-12));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind == SublinearityViolation::Kind::Convexity);
    CHECK(near(std::abs(r.witness->x.dot(r.witness->y)), 0.0, 1e-12));
  }

  TEST_CASE("negative constant fails the antipodal condition") {
    SupportSampleTable t;
    t.directions = circle_directions(36);
    t.values.assign(36, -0.25);
    const auto r = check_sublinear(t, kEps);
    REQUIRE_FALSE(r.valid);
    CHECK(r.witness->kind == SublinearityViolation::Kind::Antipodal);
  }

  TEST_CASE("direction set must be closed under negation") {
    SupportSampleTable t;
    t.directions = circle_directions(5);
    t.values.assign(5, 1.0);
    CHECK_THROWS_AS(check_sublinear(t, kEps), InvalidArgument);
  }

  TEST_CASE("irreducibility witness at the normal fan") {
    // Support minus epsilon sampled at edge normals and interior fan
    // directions fails for every polygon with at least two generators.
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto a = make_body(2, oracles::random_body(2, seed).generators(), 0.0);
      if (a.single_generator()) continue;
      const auto normals = edge_normals(a);
      std::vector<Direction> dirs;
      for (std::size_t i = 0; i < normals.size(); ++i) {
        const auto& x = normals[i];
        const auto& y = normals[(i + 1) % normals.size()];
        dirs.push_back(x);
        double ta = std::atan2(x[1], x[0]);
        double tb = std::atan2(y[1], y[0]);
        while (tb <= ta) tb += 2 * std::numbers::pi;
        for (double f : {0.25, 0.5, 0.75}) dirs.push_back(Direction::from_angle(ta + f * (tb - ta)));
      }
      const std::size_t base = dirs.size();
      for (std::size_t i = 0; i < base; ++i) dirs.push_back(-dirs[i]);
      auto table = sample_support(a, dirs);
      // Remove near-duplicates introduced by the negations.
      SupportSampleTable clean;
      for (std::size_t i = 0; i < table.directions.size(); ++i) {
        bool dup = false;
        for (const auto& d : clean.directions) dup = dup || (d.vec() - table.directions[i].vec()).norm() < 1e-9;
        if (!dup) {
          clean.directions.push_back(table.directions[i]);
          clean.values.push_back(table.values[i] - 1e-3);
        }
      }
      CHECK(check_sublinear(sample_support(a, clean.directions), kEps).valid);
      CHECK_FALSE(check_sublinear(clean, kEps).valid);
      ++tested;
    }
    CHECK(tested > 40);
  }
}

TEST_SUITE("reconstruction") {
  TEST_CASE("square from axes and diagonals") {
    const auto a = body_from_support_samples(sample_support(square(), circle_directions(8)));
    CHECK(canonical_match(a, square(), 1e-12));
  }

  TEST_CASE("constant support gives a circumscribed polygon") {
    SupportSampleTable t;
    t.directions = circle_directions(360);
    t.values.assign(360, 2.0);
    const auto a = body_from_support_samples(t);
    CHECK(a.generators().size() == 360);
    CHECK(includes(a, ball(2, 2.0)));
    for (std::size_t i = 0; i < t.directions.size(); ++i) CHECK(near(support(a, t.directions[i]), 2.0, 1e-12));
  }

  TEST_CASE("one-dimensional interval") {
    SupportSampleTable t;
    t.directions = {Direction::axis(1, 0, 1.0), Direction::axis(1, 0, -1.0)};
    t.values = {2.0, 0.0};
    const auto a = body_from_support_samples(t);
    CHECK(near(a.generators()[0][0], 1.0));
    CHECK(near(a.radius(), 1.0));
  }

  TEST_CASE("inconsistent samples are rejected") {
    SupportSampleTable t;
    t.directions = circle_directions(36);
    t.values.assign(36, -1.0);
    CHECK_THROWS_AS(body_from_support_samples(t), ValidationError);
  }

  TEST_CASE("random polygons are reconstructed from their edge normals") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto a = make_body(2, oracles::random_body(2, seed).generators(), 0.0);
      const auto sample = oracles::direction_sample(2, 8, 0, edge_normals(a));
      const auto back = body_from_support_samples(sample_support(a, sample.directions));
      CHECK(equals(back, a, 1e-9));
    }
  }
}

TEST_SUITE("balls and decomposition") {
  TEST_CASE("ball predicates") {
    const auto b = ball(2, 2.0);
    CHECK(b.single_generator());
    CHECK(b.generators()[0].norm() == 0.0);
    CHECK(near(b.radius(), 2.0));
    CHECK_FALSE(is_ball(square()));
    const auto s = minkowski_sum(ball(2, 1.0), ball(2, 3.0));
    CHECK(is_ball(s));
    CHECK(near(s.radius(), 4.0));
    CHECK_FALSE(is_ball(make_body(2, {v2(1, 0)}, 1.0)));
  }

  TEST_CASE("canonical decomposition") {
    auto d = canonical_decompose(minkowski_sum(square(), ball(2, 2.0)));
    CHECK(canonical_match(d.irreducible, square()));
    CHECK(near(d.lambda, 2.0));
    d = canonical_decompose(ball(2, 0.7));
    CHECK(canonical_match(d.irreducible, point_body(v2(0, 0))));
    CHECK(near(d.lambda, 0.7));
    d = canonical_decompose(make_body(1, {v1(0), v1(2)}));
    CHECK(near(d.irreducible.generators()[0][0], 1.0));
    CHECK(near(d.lambda, 1.0));
    CHECK_THROWS_AS(canonical_decompose(ConvexBody::raw(2, {v2(0, 0)}, 1.0)), InvalidArgument);
  }

  TEST_CASE("lambda is additive under ball sums") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto a = oracles::random_body(2, seed);
      const double r = 0.1 * static_cast<double>(seed % 7);
      CHECK(canonical_decompose(minkowski_sum(a, ball(2, r))).lambda == a.radius() + r);
    }
  }
}

TEST_SUITE("erosion") {
  TEST_CASE("regular range") {
    const auto a = minkowski_sum(square(), ball(2, 2.0));
    const auto e = inner_parallel_body(a, 2.0);
    REQUIRE(e.has_value());
    CHECK(canonical_match(*e, square()));
    CHECK(is_regular_ipb(a, 1.5));
    CHECK(is_regular_ipb(ball(2, 2.0), 2.0));
  }

  TEST_CASE("eroded square is the smaller square and not regular") {
    const auto big = examples::square(2.0);
    const auto e = inner_parallel_body(big, 1.0);
    REQUIRE(e.has_value());
    CHECK(canonical_match(*e, square(), 1e-12));
    CHECK_FALSE(is_regular_ipb(big, 1.0));
  }

  TEST_CASE("empty erosions") {
    CHECK_FALSE(inner_parallel_body(ball(2, 1.0), 2.0).has_value());
    CHECK_FALSE(inner_parallel_body(make_body(1, {v1(0), v1(2)}), 1.5).has_value());
    CHECK_FALSE(inner_parallel_body(make_body(2, {v2(0, 0), v2(1, 0)}), 0.1).has_value());
    CHECK_FALSE(inner_parallel_body(square(), 1.5).has_value());
    const auto pt = inner_parallel_body(square(), 1.0);
    REQUIRE(pt.has_value());
    CHECK(canonical_match(*pt, point_body(v2(0, 0)), 1e-12));
  }

  TEST_CASE("erosion errors") {
    CHECK_THROWS_AS(inner_parallel_body(square(), -0.1), InvalidArgument);
    const auto cube = box(Vector::Constant(3, -1.0), Vector::Constant(3, 1.0));
    CHECK_THROWS_AS(inner_parallel_body(cube, 0.5), Unsupported);
    CHECK(inner_parallel_body(minkowski_sum(cube, ball(3, 1.0)), 0.5).has_value());
  }

  TEST_CASE("regular-range identity and its failure beyond") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const auto a = oracles::random_body(2, seed);
      const double inside = unit(rng) * a.radius();
      CHECK(equals(minkowski_sum(*inner_parallel_body(a, inside), ball(2, inside)), a, 1e-9));
      if (a.single_generator()) continue;
      const double beyond = a.radius() + 1e-3 + unit(rng) * (1.0 - 1e-3);
      const auto e = inner_parallel_body(a, beyond);
      if (!e) continue;
      CHECK_FALSE(equals(minkowski_sum(*e, ball(2, beyond)), a, 1e-9));
    }
  }

  TEST_CASE("inner parallel body of the largest distance is the pointwise infimum") {
    const auto a = minkowski_sum(oracles::random_body(2, 4), ball(2, 1.0));
    const std::vector<double> lambdas{0.0, 0.3, 0.2, a.radius()};
    const auto dirs = circle_directions(720);
    const auto top = *inner_parallel_body(a, a.radius());
    for (const auto& d : dirs) {
      double inf = std::numeric_limits<double>::infinity();
      for (double l : lambdas) inf = std::min(inf, support(*inner_parallel_body(a, l), d));
      CHECK(near(support(top, d), inf, 1e-10));
    }
  }
}

TEST_SUITE("support gap") {
  TEST_CASE("gap values") {
    CHECK(near(support_gap(square(), point_body(v2(0, 0))), 1.0));
    CHECK(near(support_gap(ball(2, 5.0), square()), 5.0 - kSqrt2));
    const auto a = oracles::random_body(2, 1);
    CHECK(near(support_gap(a, a), 0.0));
    CHECK_THROWS_AS(support_gap(square(), ball(3, 1.0)), InvalidArgument);
  }

  TEST_CASE("inclusion and equality") {
    CHECK(includes(minkowski_sum(square(), ball(2, 2.0)), square()));
    CHECK_FALSE(includes(square(), ball(2, 5.0)));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto a = oracles::random_body(2, seed);
      const auto b = oracles::random_body(2, seed + 1000);
      CHECK(equals(minkowski_sum(a, b), minkowski_sum(b, a)));
    }
  }

  TEST_CASE("exact planar gap is below every sampled value and attained") {
    const auto sample = oracles::direction_sample(2, 3600, 0);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto a = oracles::random_body(2, seed);
      const auto b = oracles::random_body(2, seed + 500);
      const auto est = support_gap_estimate(a, b);
      CHECK(est.exact);
      const double sampled = oracles::sampled_support_gap(a, b, sample);
      CHECK(est.value <= sampled + 1e-12);
      // h_A - h_B is Lipschitz on the circle with constant at most the sum
      // of the bodies' outer radii.
      double lip = a.radius() + b.radius();
      for (const auto& g : a.generators()) lip = std::max(lip, a.radius() + b.radius() + g.norm());
      double rb = 0.0;
      for (const auto& g : b.generators()) rb = std::max(rb, g.norm());
      lip += rb;
      CHECK(sampled - est.value <= lip * std::numbers::pi / 3600.0);
      const auto d = Direction::normalized(est.direction);
      CHECK(near(support(a, d) - support(b, d), est.value, 1e-12));
    }
  }

  TEST_CASE("projection route agrees with the planar formula when a generator is outside") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto a = oracles::random_body(2, seed);
      const auto b = oracles::random_body(2, seed + 700);
      const auto proj = detail::support_gap_by_projection(a, b);
      if (!proj.exact) continue;
      CHECK(near(proj.value, support_gap(a, b), 1e-9));
    }
  }

  TEST_CASE("one-dimensional gap") {
    const auto a = make_body(1, {v1(-1), v1(3)});
    const auto b = make_body(1, {v1(0), v1(1)});
    CHECK(near(support_gap(a, b), 1.0));
    CHECK(near(support_gap(b, a), -2.0));
  }

  TEST_CASE("three-dimensional gap") {
    const auto cube = box(Vector::Constant(3, -1.0), Vector::Constant(3, 1.0));
    // A generator outside: exact.
    const auto shifted = point_body(Vector{{2.0, 0.0, 0.0}});
    auto est = support_gap_estimate(cube, shifted);
    CHECK(est.exact);
    CHECK(near(est.value, -1.0, 1e-9));
    // Nested: certified lower bound, close to the true value 1.
    est = support_gap_estimate(cube, point_body(Vector::Zero(3)));
    CHECK_FALSE(est.exact);
    CHECK(est.value <= 1.0 + 1e-12);
    CHECK(est.value >= 1.0 - est.slack - 1e-12);
    CHECK(est.slack > 0.0);
    // Every cube vertex lies outside the ball's centre: exact.
    est = support_gap_estimate(ball(3, 5.0), cube);
    CHECK(est.exact);
    CHECK(near(est.value, 5.0 - std::sqrt(3.0), 1e-9));
  }

  TEST_CASE("gap is the erosion depth for nested planar pairs") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto a = oracles::random_body(2, seed);
      const double s = 0.2 + 0.6 * unit(rng);
      const auto b = translate(scale(a, s), (1.0 - s) * a.generators().front());
      const double gap = support_gap(a, b);
      double lo = 0.0;
      double hi = 20.0;
      REQUIRE(inclusion_by_erosion(a, b, 0.0));
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (inclusion_by_erosion(a, b, mid) ? lo : hi) = mid;
      }
      CHECK(near(gap, lo, 1e-6));
    }
  }
}

TEST_SUITE("planar helpers") {
  TEST_CASE("ring and normals") {
    const auto ring = polygon_ring(square());
    CHECK(ring.size() == 4);
    const auto n = edge_normals(square());
    CHECK(n.size() == 4);
    CHECK(edge_normals(point_body(v2(1, 1))).empty());
    CHECK(edge_normals(make_body(2, {v2(0, 0), v2(1, 0)})).size() == 2);
    CHECK(edge_normals(make_body(1, {v1(0)})).size() == 2);
  }

  TEST_CASE("describe") { CHECK(describe(ball(2, 1.0)).find("B(1)") != std::string::npos); }
}
