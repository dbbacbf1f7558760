#pragma once

#include <cstdint>
#include <vector>

#include "swfalloc/rounding.hpp"

namespace swf {

/// Simulated utilities: u_i = floor + scale * Beta(alpha_i, beta_i).
class UtilityModel {
 public:
  UtilityModel(std::vector<double> alpha, std::vector<double> beta, double floor = 0.1,
               double scale = 0.9);

  /// Draws alpha_i, beta_i ~ U(0.5, 5) from a generator seeded with `instance_seed`.
  static UtilityModel random(std::size_t n, std::uint64_t instance_seed, double floor = 0.1,
                             double scale = 0.9);

  std::size_t size() const { return alpha_.size(); }
  double floor() const { return floor_; }
  double scale() const { return scale_; }
  double support_lo() const { return floor_; }
  double support_hi() const { return floor_ + scale_; }
  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& beta() const { return beta_; }
  const std::vector<double>& means() const { return means_; }

  double sample(std::size_t i, Rng& rng) const;

 private:
  std::vector<double> alpha_;
  std::vector<double> beta_;
  double floor_;
  double scale_;
  std::vector<double> means_;
};

}  // namespace swf
