#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "swfalloc/confseq.hpp"
#include "swfalloc/oracle.hpp"
#include "swfalloc/welfare.hpp"

namespace swf {

enum class PolicyMode { Fixed, Optimal };
enum class Direction { ExceedsW0, BelowW0 };

struct TestSpec {
  double w0 = 0.0;
  PolicyMode mode = PolicyMode::Optimal;
  Allocation policy;  // used when mode == Fixed
  Direction direction = Direction::ExceedsW0;
  double delta = 0.05;
};

enum class Verdict { ContinueSampling, RejectNull };

struct TestDecision {
  Verdict verdict = Verdict::ContinueSampling;
  std::uint64_t t = 0;  // round of rejection, 0 while continuing
  double w_lo = 0.0;
  double w_hi = 0.0;
};

/// Evaluates the test on the current bands. ExceedsW0 rejects when the lower
/// welfare bound is above W0; BelowW0 when the upper bound is below W0.
/// The bands must spend at most test.delta on the side the test reads.
TestDecision sequential_test(const TestSpec& test, const ConfState& state,
                             const WelfareSpec& spec, int k, std::uint64_t t);

/// Sticky wrapper: once the null is rejected every later query returns the
/// same decision.
class SequentialTest {
 public:
  explicit SequentialTest(TestSpec test) : test_(std::move(test)) {}
  const TestDecision& update(const ConfState& state, const WelfareSpec& spec, int k,
                             std::uint64_t t);
  const TestDecision& decision() const { return decision_; }

 private:
  TestSpec test_;
  TestDecision decision_;
};

struct StopDecision {
  std::uint64_t tau = 0;
  Allocation policy;  // argmax of M(lo ⊙ p)
  double w_lo = 0.0;
};

/// Stops when the lifted lower bound exceeds W0 and reports the policy that
/// is optimal for the lower band.
std::optional<StopDecision> optimal_stop(const ConfState& state, const WelfareSpec& spec, int k,
                                         double w0, double delta, std::uint64_t t);

class OptimalStopper {
 public:
  OptimalStopper(double w0, double delta) : w0_(w0), delta_(delta) {}
  const std::optional<StopDecision>& update(const ConfState& state, const WelfareSpec& spec,
                                            int k, std::uint64_t t);
  const std::optional<StopDecision>& decision() const { return decision_; }

 private:
  double w0_;
  double delta_;
  std::optional<StopDecision> decision_;
};

enum class Preference { Prefer1, Prefer2, Undecided };

struct ComparisonRecord {
  Preference preference = Preference::Undecided;
  double w1_lo = 0.0, w1_hi = 0.0;
  double w2_lo = 0.0, w2_hi = 0.0;
  /// Level charged to each policy's welfare band (delta / 2).
  double delta_per_policy = 0.0;
};

/// Prefer1 iff the lower bound for p1 exceeds the upper bound for p2, and
/// symmetrically. Needs two-sided bands whose joint level is at most delta / 2.
ComparisonRecord compare_policies(const Allocation& p1, const Allocation& p2,
                                  const ConfState& state, const WelfareSpec& spec, double delta);

/// Throws InvalidArgument if some logging marginal is below gamma.
void check_min_marginal(std::span<const double> p, double gamma);

const char* verdict_name(Verdict v);
const char* preference_name(Preference p);

}  // namespace swf
