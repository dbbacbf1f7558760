#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace swf {

enum class Family { WPM, Kolm, Gini };

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline bool is_neg_inf(double q) { return q == kNegInf; }

const char* family_name(Family f);
Family parse_family(const std::string& name);

/// Renders q the way configs spell it ("-inf" for the min branch).
std::string format_power(double q);
double parse_power(const std::string& text);

/// A social welfare function: family tag, weights and power parameter.
///
/// The power is an extended real; q == -inf selects the min branch exactly and
/// q == 0 the geometric-mean (WPM) or weighted-sum (Kolm) branch. Gini ignores
/// q. Construction validates the family invariants.
class WelfareSpec {
 public:
  static WelfareSpec wpm(std::vector<double> w, double q);
  static WelfareSpec kolm(std::vector<double> w, double q);
  static WelfareSpec gini(std::vector<double> w);
  static WelfareSpec make(Family family, std::vector<double> w, double q);

  Family family() const { return family_; }
  double q() const { return q_; }
  const std::vector<double>& weights() const { return w_; }
  std::size_t size() const { return w_.size(); }

  /// Egalitarian (min) welfare: WPM/Kolm at q = -inf or Gini with w = e_1.
  bool is_egalitarian() const;

 private:
  WelfareSpec(Family family, std::vector<double> w, double q);
  void validate() const;

  Family family_;
  std::vector<double> w_;
  double q_;
};

/// M(v). Throws Domain for v_i <= 0 where the WPM branch is undefined
/// (q <= 0), DimensionMismatch when len(v) != len(w).
double eval_welfare(const WelfareSpec& spec, std::span<const double> v);

/// Same as eval_welfare but uses the continuous extension at the boundary:
/// WPM with q <= 0 and some v_i == 0 evaluates to 0. Used only for 0/1
/// allocation vectors, e.g. forced-exploration rounds.
double eval_welfare_extended(const WelfareSpec& spec, std::span<const double> v);

/// l-infinity Lipschitz constant of M on [v_min, v_max]^n.
double lipschitz_bound(const WelfareSpec& spec, double v_min, double v_max);

/// Convenience: M(u ⊙ p).
double welfare_of(const WelfareSpec& spec, std::span<const double> u,
                  std::span<const double> p);
double welfare_of_extended(const WelfareSpec& spec, std::span<const double> u,
                           std::span<const double> p);

// Weight schemes used by experiments.
std::vector<double> geometric_weights(std::size_t n, double ratio);
std::vector<double> linear_weights(std::size_t n);
std::vector<double> uniform_weights(std::size_t n);

}  // namespace swf
