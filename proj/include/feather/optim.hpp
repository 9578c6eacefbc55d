#pragma once

#include <Eigen/Core>
#include <functional>
#include <random>
#include <vector>

namespace feather {

/// Axis-aligned box.
struct Box {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  Eigen::Index dim() const { return lower.size(); }
  Eigen::VectorXd clamp(const Eigen::VectorXd& x) const { return x.cwiseMax(lower).cwiseMin(upper); }
  bool contains(const Eigen::VectorXd& x) const {
    return (x.array() >= lower.array()).all() && (x.array() <= upper.array()).all();
  }
};

struct NelderMeadOptions {
  int max_evaluations = 400;
  /// Stop once the simplex is smaller than this in every coordinate.
  double x_tolerance = 1e-6;
  double f_tolerance = 1e-12;
  /// Initial simplex edge as a fraction of the box width.
  double initial_step = 0.1;
};

struct MinimizeResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int evaluations = 0;
};

/// Derivative-free local minimization. Trial points are projected onto the
/// box, so every evaluated point is feasible.
MinimizeResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& start,
                           const Box& box, const NelderMeadOptions& options = {});

/// First `count` points of a Halton sequence scaled into `box`, shifted by a
/// random Cranley-Patterson rotation drawn from `rng`.
std::vector<Eigen::VectorXd> halton_points(const Box& box, int count, std::mt19937_64& rng);

/// Latin-hypercube design: one point per stratum in every dimension.
std::vector<Eigen::VectorXd> latin_hypercube(const Box& box, int count, std::mt19937_64& rng);

/// Uniform draw in [0, 1) from the top 53 bits of the generator.
double uniform01(std::mt19937_64& rng);

double normal_pdf(double z);
double normal_cdf(double z);

}  // namespace feather
