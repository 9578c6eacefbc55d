#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <vector>

#include "json.hpp"

namespace feather {

/// Anisotropic squared-exponential kernel plus observation noise:
/// k(a, b) = s^2 exp(-1/2 sum_d ((a_d - b_d) / l_d)^2).
struct KernelHyperparams {
  double signal_variance = 1.0;
  Eigen::VectorXd length_scales = Eigen::VectorXd::Ones(3);
  double noise_variance = 1e-4;

  void validate(Eigen::Index dim) const;
  double kernel(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
};

struct Posterior {
  double mean = 0.0;
  double variance = 0.0;
};

/// Exact GP regression with a constant prior mean equal to the sample mean of
/// the targets (zero with no data).
class GaussianProcess {
 public:
  static constexpr double kDefaultJitter = 1e-8;

  GaussianProcess(std::vector<Eigen::VectorXd> inputs, Eigen::VectorXd targets, KernelHyperparams hyper,
                  double jitter = kDefaultJitter);

  Posterior predict(const Eigen::VectorXd& x) const;
  double log_marginal_likelihood() const { return log_marginal_likelihood_; }
  double prior_mean() const { return prior_mean_; }
  std::size_t size() const { return inputs_.size(); }

 private:
  std::vector<Eigen::VectorXd> inputs_;
  KernelHyperparams hyper_;
  double prior_mean_ = 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::VectorXd alpha_;
  double log_marginal_likelihood_ = 0.0;
};

void to_json(nlohmann::json& j, const KernelHyperparams& h);

}  // namespace feather
