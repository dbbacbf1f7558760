#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swfalloc/welfare.hpp"

namespace swf {

/// Marginal allocation probabilities: 0 <= p_i <= 1 and sum(p) == k.
struct Allocation {
  std::vector<double> p;
  int k = 0;
};

/// Feasibility tolerance shared by every solver and by Allocation checks.
inline constexpr double kFeasTol = 1e-9;

bool is_feasible(const Allocation& a, double tol = kFeasTol);

// Exact maximizers of M(u ⊙ p) over {p in [0,1]^n : sum p = k}. All of them
// require u_i > 0 and 1 <= k <= n; k == n returns the all-ones vector.
Allocation solve_wpm(std::span<const double> u, std::span<const double> w, double q, int k);
Allocation solve_kolm(std::span<const double> u, std::span<const double> w, double q, int k);
Allocation solve_gini(std::span<const double> u, std::span<const double> w, int k);

/// Dispatches on the family of `spec`.
Allocation solve(const WelfareSpec& spec, std::span<const double> u, int k);

struct ReferenceResult {
  Allocation allocation;
  double objective = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Projected subgradient ascent over the capped simplex. Slow, but shares no
/// code with the water-filling solvers; used for differential testing.
ReferenceResult solve_reference(const WelfareSpec& spec, std::span<const double> u, int k,
                                int iters = 60000, double tol = 1e-7);

/// Euclidean projection of y onto {p : lo <= p_i <= 1, sum p = k}.
std::vector<double> project_capped_simplex(std::span<const double> y, double k, double lo = 0.0);

namespace detail {

/// Gini solver variant that picks the best whole block instead of the best
/// suffix inside a block. Kept for comparison only; it is not optimal.
Allocation solve_gini_block_rule(std::span<const double> u, std::span<const double> w, int k);

}  // namespace detail

}  // namespace swf
