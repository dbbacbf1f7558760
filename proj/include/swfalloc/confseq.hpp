#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "swfalloc/oracle.hpp"
#include "swfalloc/welfare.hpp"

namespace swf {

/// How the miscoverage level delta is shared across the n per-individual
/// sequences. OneSided spends delta/n on each upper bound (all the bandit loop
/// needs); TwoSided spends delta/(2n) per side so both bounds hold jointly.
enum class LevelSplit { OneSided, TwoSided };

struct ConfParams {
  std::size_t n = 0;
  double delta = 0.05;
  double sigma = 1.0;
  LevelSplit split = LevelSplit::OneSided;
  /// Known support of the utilities. Bounds are intersected with it, which
  /// keeps them valid; the defaults disable clipping.
  double support_lo = -std::numeric_limits<double>::infinity();
  double support_hi = std::numeric_limits<double>::infinity();
};

/// Boundary radius after m observations at per-sequence level delta_i:
/// 1.7 sigma sqrt((ln(5.2 / delta_i) + max(0, ln ln(2m))) / m).
double cs_radius(std::uint64_t m, double delta_i, double sigma);

/// Per-individual anytime-valid confidence sequences for the mean utilities.
///
/// Bounds are running intersections over time, so hi() is nonincreasing and
/// lo() nondecreasing in the count. An individual with no observations
/// reports (-inf, +inf).
class ConfState {
 public:
  explicit ConfState(const ConfParams& params);

  void update(std::size_t i, double u_obs);

  std::size_t size() const { return count_.size(); }
  const ConfParams& params() const { return params_; }
  double delta() const { return params_.delta; }
  /// Level spent on each individual's (one-sided) bound.
  double per_individual_delta() const;

  std::uint64_t count(std::size_t i) const { return count_[i]; }
  double mean(std::size_t i) const { return mean_[i]; }
  double lo(std::size_t i) const { return lo_[i]; }
  double hi(std::size_t i) const { return hi_[i]; }
  std::span<const double> lo() const { return lo_; }
  std::span<const double> hi() const { return hi_; }
  std::span<const std::uint64_t> counts() const { return count_; }

  bool all_observed() const;

 private:
  ConfParams params_;
  std::vector<std::uint64_t> count_;
  std::vector<double> mean_;
  std::vector<double> lo_;
  std::vector<double> hi_;
};

struct LiftedInterval {
  double w_lo = 0.0;
  double w_hi = 0.0;
  Allocation p_lo;
  Allocation p_hi;
};

/// Welfare interval for the optimal policy: optimizes M over the lower and
/// the upper utility bounds. Requires 0 < lo_i <= hi_i (Domain otherwise).
LiftedInterval lift_cs(const WelfareSpec& spec, std::span<const double> lo,
                       std::span<const double> hi, int k);

/// (M(lo ⊙ p), M(hi ⊙ p)) for a fixed policy p.
std::pair<double, double> fixed_policy_cs(const WelfareSpec& spec, std::span<const double> lo,
                                          std::span<const double> hi, const Allocation& p);

/// lift_cs on a ConfState snapshot. Refuses unobserved individuals. A lower
/// bound vector with nonpositive entries is replaced by the trivial bound
/// W_lo = 0 (welfare of nonnegative utilities is nonnegative) and p_lo is
/// left empty.
LiftedInterval lift_state(const WelfareSpec& spec, const ConfState& state, int k);

/// fixed_policy_cs on a ConfState snapshot. Negative lower bounds are raised
/// to 0 before evaluating, which stays valid for nonnegative utilities.
std::pair<double, double> fixed_policy_state(const WelfareSpec& spec, const ConfState& state,
                                             const Allocation& p);

}  // namespace swf
