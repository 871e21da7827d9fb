#pragma once

#include <optional>

#include "firwb/semilinear.hpp"

namespace firwb {

struct Split {
  RatFunc g;  // in xi_1
  RatFunc h;  // in xi_1 (the third variable renamed)
  Scalar y0;
};

/// f(x, y) in xi_1, xi_2 with f(x,y) + f(y,z) = f(x,z): returns g, h with
/// f(x,z) = g(x) + h(z), from g = f(x, y0), h = f(y0, z). Throws
/// NotACocycle or NoGoodPoint.
Split split_symmetric_cocycle(const RatFunc& f);

/// Result of solving a transposition cocycle: either the coboundary
/// generator b (an element at level 1) with c(s) = b - s b, or zero.
struct CocycleSolution {
  bool zero = false;
  std::optional<TruncElement> generator;
};

/// c12 is the value at (1 2) of a cocycle into I^r vanishing on the
/// permutations fixing 1, given as an element of I^r at level 2.
/// Throws NotACocycle, NonZeroObstruction or InvalidInput.
CocycleSolution solve_transposition_cocycle(std::uint32_t r, const TruncElement& c12);

/// c((1 2)), c((1 3)), c((2 3)) at level 3 determined by c12.
std::vector<TruncElement> transposition_values(const TruncElement& c12);
/// Checks c(s) = b - s b for the three transpositions of [3].
bool verify_coboundary(const TruncElement& c12, const TruncElement& b);
/// The two relations forced on c12, checked at level 3.
bool satisfies_cocycle_relations(const TruncElement& c12);

}  // namespace firwb
