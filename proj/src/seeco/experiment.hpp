#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seeco/baselines.hpp"

namespace seeco {

enum class SweepVariable { kPop, kIters, kPc, kPm, kRiskCap, kLambda, kServers, kTasks };

std::string_view to_string(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);

// "a:b:step", inclusive of b up to rounding.
std::vector<double> parse_range(std::string_view spec);
std::vector<double> default_sweep_values(SweepVariable v);

// GA settings held fixed while one GA parameter is swept (groups 1-4 of the
// parameter study); defaults for every other variable.
GaParams sweep_base_params(SweepVariable v);

struct WorkflowSource {
  std::optional<std::filesystem::path> path;
  int tasks = 30;
  double density = 0.3;
  std::uint64_t seed = 1;
  GeneratorConfig generator;
};

struct PlatformSource {
  std::optional<std::filesystem::path> path;
  int servers = 3;
};

struct ExperimentConfig {
  WorkflowSource workflow;
  PlatformSource platform;
  std::optional<std::filesystem::path> catalog;
  std::vector<Strategy> strategies{Strategy::kSeeco};
  GaParams ga;
  RiskModel risk;
  std::optional<double> risk_cap;  // overrides the workflow's own cap
  SweepVariable variable = SweepVariable::kRiskCap;
  std::vector<double> values;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  bool literal_core_ratio = true;
  int threads = 0;  // 0: SEECO_THREADS, else hardware concurrency
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> summary_out;

  void validate() const;
};

// JSON mirror of the CLI flags, e.g.
// {"sweep": "risk_cap", "range": "0.1:1.0:0.1", "strategy": ["seeco", "local"],
//  "workflow": {"tasks": 30, "density": 0.3, "seed": 1}, "platform": {"servers": 3},
//  "seeds": [1, 2, 3], "pop": 40, "iters": 150, "pc": 0.5, "pm": 0.3, "out": "rows.csv"}
ExperimentConfig parse_experiment_config(const std::string& json_text);

struct SweepRow {
  double value = 0.0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::kSeeco;
  double energy = 0.0;
  double makespan = 0.0;
  double risk = 0.0;
  double violation = 0.0;
  bool feasible = false;
};

struct SweepSummary {
  double value = 0.0;
  Strategy strategy = Strategy::kSeeco;
  int runs = 0;
  double mean_energy = 0.0;
  double mean_makespan = 0.0;
  double mean_risk = 0.0;
  double mean_violation = 0.0;
  double feasible_rate = 0.0;
};

// Rows ordered by (sweep value, strategy, seed) regardless of thread count.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);
std::vector<SweepSummary> summarize(const std::vector<SweepRow>& rows);

int resolve_thread_count(int requested);

void write_sweep_csv(std::ostream& os, SweepVariable v, const std::vector<SweepRow>& rows);
void write_sweep_summary_csv(std::ostream& os, SweepVariable v,
                             const std::vector<SweepSummary>& rows);

}  // namespace seeco
