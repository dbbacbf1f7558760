#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace swf {

using Rng = std::mt19937_64;

/// Entries closer than this to 0 or 1 count as integral.
inline constexpr double kFracTol = 1e-9;

/// Draws a set of exactly k = sum(pi) indices (0-based, ascending) whose
/// inclusion probabilities equal pi, by pairwise dependent rounding. The two
/// leftmost fractional entries are paired at every step.
///
/// Throws InvalidArgument if some pi_i leaves [0, 1] or the sum is not an
/// integer (both up to kFracTol).
std::vector<std::size_t> dependent_round(std::span<const double> pi, Rng& rng);

namespace detail {

/// One pairwise step on fractional (a, b) given a uniform draw r in [0, 1).
/// Both outputs keep their expectation over r, and at least one is 0 or 1.
std::pair<double, double> pair_round(double a, double b, double r);

}  // namespace detail

}  // namespace swf
