#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "feather/gp.hpp"
#include "feather/optim.hpp"
#include "json.hpp"

namespace feather {

/// Box over the log-ratio controller coordinates at a fixed period.
struct SearchSpace {
  Box bounds;
  double period_s = 1.5;

  void validate() const;
  /// Each of the three log ratios in [ln 0.2, ln 5].
  static SearchSpace log_ratio_default(double period_s = 1.5);
};

struct Observation {
  Eigen::VectorXd x;
  /// Objective value in the caller's units (not negated for minimization).
  double y = 0.0;
  std::string trace_ref;
  bool failed = false;
};

struct IterationRecord {
  int iter = 0;
  Eigen::VectorXd x;
  double y = 0.0;
  double incumbent_y = 0.0;
  KernelHyperparams hyperparams;
  bool failed = false;
};

enum class Direction { Maximize, Minimize };

struct OptimizationState {
  std::vector<Observation> observations;
  KernelHyperparams kernel_hyperparams;
  Direction direction = Direction::Maximize;
  double jitter = GaussianProcess::kDefaultJitter;
  std::uint64_t rng_seed = 0;
  std::vector<IterationRecord> log;
  std::vector<std::string> warnings;

  /// Objective value as the optimizer sees it (negated for minimization).
  double internal_y(const Observation& o) const { return direction == Direction::Maximize ? o.y : -o.y; }
  /// Best observation in the optimization direction; nullopt when empty.
  std::optional<std::size_t> incumbent_index() const;
  GaussianProcess model() const;
};

/// Posterior of the internal (maximized) objective at `x`.
Posterior gp_posterior(const OptimizationState& state, const Eigen::VectorXd& x);

/// Expected improvement over `best` for maximization.
double expected_improvement(double mean, double variance, double best);

/// Blended acquisition (1 - e) EI(x) + e sigma(x) scale. The scale is
/// max EI / max sigma over a fixed quasi-random reference set, so both terms
/// share EI's magnitude; it falls back to 1 when either maximum vanishes.
class Acquisition {
 public:
  Acquisition(const OptimizationState& state, const Box& bounds, double exploration_ratio,
              const std::vector<Eigen::VectorXd>& reference_points);

  double operator()(const Eigen::VectorXd& x) const;
  double sigma(const Eigen::VectorXd& x) const;
  double scale() const { return scale_; }

 private:
  GaussianProcess gp_;
  double best_ = 0.0;
  double exploration_ = 0.0;
  double scale_ = 1.0;
};

struct AcquireOptions {
  int starts = 64;
  NelderMeadOptions local{300, 1e-6, 1e-14, 0.05};
};

/// Multi-start local maximization of `acquisition` from `starts`; returns
/// the max-sigma point instead when the acquisition is flat or non-positive.
Eigen::VectorXd maximize_acquisition(const Acquisition& acquisition, const std::vector<Eigen::VectorXd>& starts,
                                     const Box& bounds, const NelderMeadOptions& local);

/// Next point to evaluate: multi-start local maximization of the blended
/// acquisition from quasi-random starts. Falls back to the max-sigma point
/// when the acquisition is flat. `rng` drives the start-set rotation.
Eigen::VectorXd acquire(const OptimizationState& state, const Box& bounds, double exploration_ratio,
                        std::mt19937_64& rng, const AcquireOptions& options = {});

struct RefitOptions {
  int starts = 8;
  double log_signal_variance_lo = std::log(1e-6), log_signal_variance_hi = std::log(1e4);
  double log_length_scale_lo = std::log(0.05), log_length_scale_hi = std::log(20.0);
  double log_noise_variance_lo = std::log(1e-8), log_noise_variance_hi = std::log(1e2);
  NelderMeadOptions local{600, 1e-5, 1e-10, 0.1};
};

/// Maximizes the log marginal likelihood over log-hyperparameters. Never
/// returns hyperparameters with a lower likelihood than the current ones.
/// Requires at least 4 observations.
OptimizationState refit_hyperparams(OptimizationState state, std::mt19937_64& rng, const RefitOptions& options = {});

struct OptimizeOptions {
  int budget = 30;
  int initial_design = 5;
  double exploration_ratio = 0.6;
  Direction direction = Direction::Maximize;
  std::uint64_t seed = 0;
  KernelHyperparams initial_hyperparams;
  double jitter = GaussianProcess::kDefaultJitter;
  AcquireOptions acquire;
  RefitOptions refit;
};

/// Objective failures are signalled by throwing; the optimizer records a
/// penalized observation and continues.
using Objective = std::function<double(const Eigen::VectorXd& x, int iter)>;

/// Latin-hypercube initial design followed by sequential
/// refit / acquire / evaluate steps until the budget is spent.
OptimizationState optimize(const Objective& objective, const SearchSpace& space, const OptimizeOptions& options);

/// `{iter, x, y, incumbent_y, hyperparams, failed}`.
nlohmann::json to_json(const IterationRecord& record);
/// One JSON document per line.
std::string iteration_log_jsonl(const OptimizationState& state);

std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);

}  // namespace feather
