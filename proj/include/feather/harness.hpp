#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "feather/bayes_opt.hpp"
#include "feather/controller.hpp"
#include "feather/geometry.hpp"
#include "feather/hydro.hpp"
#include "feather/metrics.hpp"
#include "feather/robot.hpp"
#include "json.hpp"

namespace feather {

extern const char* const kVersion;

struct OptimizeSettings {
  int budget = 30;
  int initial_design = 5;
  double exploration_ratio = 0.6;
  Direction direction = Direction::Maximize;
  double period_s = 1.5;
  double amplitude_rad = kPi / 3.0;
  Eigen::VectorXd lower = SearchSpace::log_ratio_default().bounds.lower;
  Eigen::VectorXd upper = SearchSpace::log_ratio_default().bounds.upper;
  /// Objective value used for traces that never push downward.
  double unbounded_tr_cap = 100.0;
  /// Std of zero-mean Gaussian noise added to each TR evaluation; 0 disables.
  double noise_std = 0.0;

  SearchSpace space() const;
  void validate() const;
};

struct SweepSettings {
  FeatherKind morphology = FeatherKind::ChordwiseFlaps;
  /// Length for chordwise sweeps, width for spanwise sweeps.
  double fixed_m = 0.12;
  /// Swept width (chordwise) or length (spanwise) values.
  std::vector<double> values_m;
  double spine_width_m = 0.01;
  double root_length_m = 0.06;
  std::vector<double> t_up_s{0.1, 0.5};
  std::vector<double> t_down_s{0.5, 1.0};
  /// Total hold per cycle, split evenly between the two holds.
  std::vector<double> t_hold_s{0.0, 0.5, 1.0};
  double amplitude_rad = kPi / 3.0;

  /// The default grid for the given morphology.
  static SweepSettings default_for(FeatherKind morphology);
  std::vector<StrokeController> controllers() const;
  /// Full-feather geometries; `base` supplies thickness and density.
  std::vector<FeatherGeometry> geometries(const FeatherGeometry& base) const;
  /// Spine-only (chordwise) or root-only (spanwise) plain feather.
  FeatherGeometry reference(const FeatherGeometry& base) const;
  void validate() const;
};

struct ValidationDesignSpec {
  std::string id;
  FeatherGeometry geometry;
  std::filesystem::path best_incumbent;
  std::filesystem::path worst_incumbent;
};

struct ValidationSettings {
  int repetitions = 10;
  /// Measured cycles per repetition; transient cycles are added on top.
  int cycles = 5;
  double noise_std = 0.0;
  std::vector<ValidationDesignSpec> designs;
};

struct ExperimentConfig {
  std::string command;
  std::string name = "experiment";
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 0;
  /// 0 means one worker per hardware thread.
  int workers = 0;
  int spanwise_elements = 8;
  JointModel joints;
  FluidConfig fluid;
  SimConfig sim;
  FeatherGeometry geometry;
  StrokeController controller;
  OptimizeSettings optimize;
  SweepSettings sweep;
  ValidationSettings validate;
  RobotBody body;
  SwimConfig swim;
  /// The document as read, kept for the manifest hash.
  nlohmann::json source;

  std::filesystem::path run_dir() const { return output_dir / name; }
  FeatherMesh mesh() const { return build_mesh(geometry, spanwise_elements, joints); }
};

const std::vector<std::string>& subcommands();

/// Strict schema check: unknown keys, wrong types and invalid values all raise
/// ConfigError before any compute starts.
ExperimentConfig parse_config(const nlohmann::json& document, const std::string& command);
ExperimentConfig load_config(const std::filesystem::path& path, const std::string& command);

/// Runs `task(i)` for i in [0, count) on up to `workers` threads. Exceptions
/// escape per task through `errors[i]` (empty string on success).
std::vector<std::string> parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& task);
int effective_workers(int requested);

struct OptimizationRun {
  OptimizationState state;
  StrokeController incumbent;
  LogRatioParams incumbent_ratios;
  double incumbent_y = 0.0;
};

/// Bayesian optimization of the thrust ratio for one feather mesh.
/// `on_trace` sees every successful simulation in evaluation order.
OptimizationRun run_optimization(const FeatherMesh& mesh, const OptimizeSettings& settings, const FluidConfig& fluid,
                                 const SimConfig& sim, std::uint64_t seed,
                                 const std::function<void(int, const ThrustTrace&)>& on_trace = {});

nlohmann::json incumbent_json(const OptimizationRun& run, const OptimizeSettings& settings,
                              const FeatherGeometry& geometry, std::uint64_t seed);
/// Reads a controller from an incumbent file, checking its direction.
StrokeController load_incumbent(const std::filesystem::path& path, Direction expected);

struct SweepRow {
  std::size_t geometry_index = 0;
  std::size_t controller_index = 0;
  std::string design_id;
  FeatherGeometry geometry;
  RatioDescriptor ratios;
  StrokeController controller;
  ThrustMetrics metrics;
  double reference_avg_thrust_N = 0.0;
  double normalized_ratio = 0.0;
  bool failed = false;
  std::string error;
};

struct SweepGeometrySummary {
  std::string design_id;
  FeatherGeometry geometry;
  RatioDescriptor ratios;
  /// Max normalized ratio over the successful controllers; nullopt when all failed.
  std::optional<double> max_normalized_ratio;
  std::optional<std::size_t> best_controller_index;
  StrokeController best_controller;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepGeometrySummary> summary;

  std::size_t failures() const;
};

SweepResult run_sweep(const SweepSettings& settings, const FeatherGeometry& base, int spanwise_elements,
                      const JointModel& joints, const FluidConfig& fluid, const SimConfig& sim, int workers);

/// Successful rows only; failures go to `sweep_failures_jsonl`.
void write_sweep_csv(std::ostream& os, const SweepResult& result);
void write_sweep_summary_csv(std::ostream& os, const SweepResult& result);
std::string sweep_failures_jsonl(const SweepResult& result);

struct ValidationDesign {
  std::string id;
  FeatherGeometry geometry;
  StrokeController best;
  StrokeController worst;
};

struct ValidationRow {
  std::string design_id;
  std::string controller_label;
  StrokeController controller;
  int repetitions = 1;
  double tr_mean = 0.0;
  double tr_std = 0.0;
  bool tr_unbounded = false;
  double avg_thrust_mean_N = 0.0;
  double avg_thrust_std_N = 0.0;
  bool failed = false;
  std::string error;
  ThrustTrace trace;
};

/// Each design against its best, the baseline and its worst controller.
/// Repetitions differ only through the TR noise; without noise each
/// configuration is simulated and reported once.
std::vector<ValidationRow> run_validation(const std::vector<ValidationDesign>& designs, const ValidationSettings& settings,
                                          int spanwise_elements, const JointModel& joints, const FluidConfig& fluid,
                                          const SimConfig& sim, std::uint64_t seed, int workers);

nlohmann::json validation_json(const std::vector<ValidationRow>& rows);

/// Stable 64-bit FNV-1a hash of the canonical config text, in hex.
std::string config_hash(const nlohmann::json& config);
nlohmann::json manifest_json(const ExperimentConfig& config);

}  // namespace feather
