#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swfalloc/bandit.hpp"
#include "swfalloc/inference.hpp"
#include "swfalloc/welfare.hpp"

namespace swf {

enum class WeightScheme { Geometric, Linear, Uniform, Explicit };

struct InferConfig {
  enum class Procedure { Test, Stop, Compare };
  Procedure procedure = Procedure::Test;
  double w0 = 0.0;
  PolicyMode mode = PolicyMode::Optimal;
  Direction direction = Direction::ExceedsW0;
  std::vector<double> policy;   // fixed-policy test, or p1 for compare
  std::vector<double> policy2;  // p2 for compare
  double delta = 0.05;
  /// Logging policy marginals; empty means uniform k / n. Ignored when
  /// `bandit_logging` is set or observations come from a file.
  std::vector<double> logging;
  bool bandit_logging = false;
  double min_marginal = 0.0;
  std::uint64_t max_rounds = 10000;
  std::string observations;  // CSV with columns round,individual,utility
};

struct ExperimentConfig {
  std::size_t n = 0;
  std::vector<int> k;
  std::vector<std::uint64_t> horizon;
  Family family = Family::WPM;
  std::vector<double> q;
  WeightScheme scheme = WeightScheme::Geometric;
  double ratio = 0.9;
  std::vector<double> explicit_weights;

  std::uint64_t instance_seed = 0;
  std::vector<double> alpha;  // explicit Beta parameters, else drawn from instance_seed
  std::vector<double> beta;
  double floor = 0.1;
  double scale = 0.9;

  double delta = 0.05;
  double sigma = 1.0;
  LevelSplit split = LevelSplit::OneSided;
  bool clip_to_support = false;

  std::uint64_t seed = 0;
  std::uint64_t num_seeds = 5;
  std::uint64_t snapshot_every = 0;
  bool track_bounds = true;
  std::string out = "out";

  std::optional<InferConfig> infer;

  std::vector<std::uint64_t> run_seeds() const;
  std::vector<double> weights() const;
  WelfareSpec welfare(double q) const;
  UtilityModel environment() const;
  ConfParams conf_params() const;
};

/// Parses a JSON config. `origin` prefixes error messages, which carry the
/// line of the offending token. Throws Error(Config).
ExperimentConfig parse_config(const std::string& text, const std::string& origin = "<config>");
ExperimentConfig load_config(const std::string& path);

struct CliOptions {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 0;  // 0: SWF_ALLOC_JOBS, else 1
  std::optional<std::uint64_t> snapshot_every;
};

/// --jobs if positive, else SWF_ALLOC_JOBS if set to a positive integer, else 1.
unsigned resolve_jobs(unsigned flag);

/// Applies --out/--seed/--snapshot-every overrides.
void apply_overrides(ExperimentConfig& cfg, const CliOptions& opts);

void write_trace_csv(const std::string& path, const std::vector<RegretTrace>& traces);
void write_snapshots_csv(const std::string& path, const std::vector<RegretTrace>& traces,
                         std::size_t n);

inline constexpr const char* kTraceHeader = "t,regret_inst,regret_cum,welfare_opt,welfare_t,W_lo,W_hi,seed";

// Subcommands. Progress goes to `log`; results go to files under the
// configured output directory.
void command_run(const CliOptions& opts, std::ostream& log);
void command_sweep(const CliOptions& opts, std::ostream& log);
void command_infer(const CliOptions& opts, std::ostream& log);
/// Oracle differential and coverage checks; returns true when all pass. The
/// config is optional here.
bool command_validate(const CliOptions& opts, std::ostream& log);

}  // namespace swf
