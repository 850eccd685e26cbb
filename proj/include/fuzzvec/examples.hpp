#pragma once

// Reference constructions used by the fixtures, the tests and the
// acceptance checks.

#include "fuzzvec/fuzzy.hpp"

namespace fuzzvec::examples {

/// [-h, h]^2.
geometry::ConvexBody square(double half_side = 1.0);

/// Knots {0, 0.25, 0.5, 0.75, 1}.
fuzzy::AlphaGrid quarter_grid();

/// Levels (1 - alpha) [-1, 1]^2 + B(2): a vector with many Mares cores.
fuzzy::FuzzyVector family_u();
/// Levels (1 - alpha) [-1, 1]^2 + B(lambda alpha).
fuzzy::FuzzyVector family_v(double lambda);
/// Levels B(2 - lambda alpha).
fuzzy::FuzzyVector family_w(double lambda);

/// The fuzzy number u(t) = 1 - t/2 on [0, 2]: levels [0, 2 - 2 alpha].
fuzzy::FuzzyVector triangular_number();

/// Singletons {1 - alpha_k} on knots {0, 0.5, 1}; not nested.
std::vector<geometry::ConvexBody> singleton_levels();
fuzzy::AlphaGrid singleton_grid();

/// Constant levels B(1), and levels B(2 - 2 alpha), on the quarter grid.
fuzzy::FuzzyVector unit_ball_vector();
fuzzy::FuzzyVector shrinking_ball_vector();

}  // namespace fuzzvec::examples
