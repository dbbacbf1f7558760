#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swfalloc/confseq.hpp"
#include "swfalloc/environment.hpp"
#include "swfalloc/oracle.hpp"
#include "swfalloc/rounding.hpp"
#include "swfalloc/welfare.hpp"

namespace swf {

/// Number of forced-exploration rounds, ceil(n / k).
std::uint64_t forced_rounds(std::size_t n, int k);

/// Round-robin cover for round t (1-based): k consecutive indices starting at
/// (t - 1) k mod n, wrapping around. Indices are 0-based, in cover order.
std::vector<std::size_t> forced_exploration_set(std::uint64_t t, std::size_t n, int k);

struct StepRecord {
  std::uint64_t t = 0;
  bool forced = false;
  Allocation policy;               // p_t (0/1 during the forced phase)
  std::vector<std::size_t> chosen; // S_t
  std::vector<double> observed;    // u_{t,i} for i in chosen, same order
  double welfare_t = 0.0;          // M(mu ⊙ p_t)
  double regret_inst = 0.0;
  double regret_cum = 0.0;
  /// Lifted interval from the bands p_t was computed on; absent in the forced
  /// phase or when bound tracking is off.
  std::optional<LiftedInterval> bounds;
};

/// One SWF-UCB run against a simulated environment.
class BanditState {
 public:
  BanditState(WelfareSpec spec, int k, const ConfParams& cs, UtilityModel env,
              bool track_bounds = false);

  /// Plays round t + 1: choose p_t, round it, observe S_t, update the bands.
  StepRecord step(Rng& rng);

  std::uint64_t t() const { return t_; }
  int k() const { return k_; }
  double regret() const { return regret_; }
  const WelfareSpec& spec() const { return spec_; }
  const ConfState& conf() const { return conf_; }
  const UtilityModel& env() const { return env_; }
  const Allocation& optimal_policy() const { return p_star_; }
  double welfare_opt() const { return welfare_opt_; }

 private:
  WelfareSpec spec_;
  int k_;
  UtilityModel env_;
  ConfState conf_;
  bool track_bounds_;
  std::uint64_t forced_;
  std::uint64_t t_ = 0;
  double regret_ = 0.0;
  Allocation p_star_;
  double welfare_opt_ = 0.0;
};

struct TraceRow {
  std::uint64_t t = 0;
  double regret_inst = 0.0;
  double regret_cum = 0.0;
  double welfare_opt = 0.0;
  double welfare_t = 0.0;
  bool has_bounds = false;
  double w_lo = 0.0;
  double w_hi = 0.0;
};

struct PolicySnapshot {
  std::uint64_t t = 0;
  std::vector<double> p;
};

struct RegretTrace {
  std::uint64_t seed = 0;
  double welfare_opt = 0.0;
  std::vector<TraceRow> rows;
  std::vector<PolicySnapshot> snapshots;

  double final_regret() const { return rows.empty() ? 0.0 : rows.back().regret_cum; }
};

struct ExperimentSpec {
  WelfareSpec spec;
  int k = 1;
  std::uint64_t horizon = 0;
  ConfParams cs;  // cs.n is overwritten with the population size
  UtilityModel env;
  std::vector<std::uint64_t> run_seeds;
  std::uint64_t snapshot_every = 0;  // 0 disables policy snapshots
  bool track_bounds = true;
};

/// Plays one run of `horizon` rounds with the sampling generator seeded by `seed`.
RegretTrace run_single(const ExperimentSpec& exp, std::uint64_t seed);

/// One trace per run seed, in seed order. Runs are spread over `jobs` threads;
/// the output does not depend on `jobs`.
std::vector<RegretTrace> run_experiment(const ExperimentSpec& exp, unsigned jobs = 1);

}  // namespace swf
