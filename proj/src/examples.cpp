#include "fuzzvec/examples.hpp"

namespace fuzzvec::examples {

namespace g = geometry;
using fuzzy::Mode;

g::ConvexBody square(double h) {
  return g::make_body(2, {g::Vector{{-h, -h}}, g::Vector{{h, -h}}, g::Vector{{h, h}}, g::Vector{{-h, h}}});
}

fuzzy::AlphaGrid quarter_grid() { return fuzzy::AlphaGrid({0.0, 0.25, 0.5, 0.75, 1.0}); }

namespace {

fuzzy::FuzzyVector square_family(double radius0, double radius_slope) {
  const auto grid = quarter_grid();
  std::vector<g::ConvexBody> levels;
  for (double a : grid.knots()) {
    const auto s = square(1.0 - a);
    levels.push_back(g::make_body(2, s.generators(), radius0 + radius_slope * a));
  }
  return fuzzy::make_fuzzy(grid, std::move(levels), Mode::Linear);
}

}  // namespace

fuzzy::FuzzyVector family_u() { return square_family(2.0, 0.0); }
fuzzy::FuzzyVector family_v(double lambda) { return square_family(0.0, lambda); }

fuzzy::FuzzyVector family_w(double lambda) {
  const auto grid = quarter_grid();
  std::vector<g::ConvexBody> levels;
  for (double a : grid.knots()) levels.push_back(g::ball(2, 2.0 - lambda * a));
  return fuzzy::make_fuzzy(grid, std::move(levels), Mode::Linear);
}

fuzzy::FuzzyVector triangular_number() {
  return fuzzy::make_fuzzy(fuzzy::AlphaGrid({0.0, 1.0}),
                           {g::make_body(1, {g::Vector::Constant(1, 0.0), g::Vector::Constant(1, 2.0)}),
                            g::point_body(g::Vector::Constant(1, 0.0))},
                           Mode::Linear);
}

fuzzy::AlphaGrid singleton_grid() { return fuzzy::AlphaGrid({0.0, 0.5, 1.0}); }

std::vector<g::ConvexBody> singleton_levels() {
  std::vector<g::ConvexBody> out;
  for (double a : singleton_grid().knots()) out.push_back(g::point_body(g::Vector::Constant(1, 1.0 - a)));
  return out;
}

fuzzy::FuzzyVector unit_ball_vector() {
  const auto grid = quarter_grid();
  return fuzzy::make_fuzzy(grid, std::vector<g::ConvexBody>(grid.size(), g::ball(2, 1.0)), Mode::Linear);
}

fuzzy::FuzzyVector shrinking_ball_vector() {
  const auto grid = quarter_grid();
  std::vector<g::ConvexBody> levels;
  for (double a : grid.knots()) levels.push_back(g::ball(2, 2.0 - 2.0 * a));
  return fuzzy::make_fuzzy(grid, std::move(levels), Mode::Linear);
}

}  // namespace fuzzvec::examples
