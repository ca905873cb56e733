#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace csfq::fit {

/// Fills `residuals` for the parameter vector `params`.
using ResidualFunction = std::function<void(std::span<const double> params, std::span<double> residuals)>;

struct LmOptions {
  int max_iterations = 200;
  /// Converged when ||step|| < step_tolerance * (||x|| + step_tolerance).
  double step_tolerance = 1e-10;
  /// Converged when ||J^T r||_inf < gradient_tolerance.
  double gradient_tolerance = 1e-12;
  /// Central-difference step relative to max(|x_j|, 1e-3).
  double jacobian_step = 1e-6;
  double initial_damping = 1e-3;
  /// Singular-value ratio below which the initial Jacobian is rank deficient.
  double rank_tolerance = 1e-8;
};

struct LmResult {
  Eigen::VectorXd params;
  Eigen::VectorXd residuals;
  Eigen::MatrixXd jacobian;
  /// 0.5 ||r||^2 at the solution.
  double cost = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string stop_reason;
  /// Cost at the start and after every accepted step.
  std::vector<double> cost_history;

  /// s^2 (J^T J)^+ with s^2 = ||r||^2 / (m - n); zero when m <= n.
  Eigen::MatrixXd covariance() const;
};

class RankDeficientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Central-difference Jacobian with the step rule of LmOptions::jacobian_step.
Eigen::MatrixXd numeric_jacobian(const ResidualFunction& f, const Eigen::VectorXd& x, Eigen::Index residual_count,
                                 double relative_step);

/// Levenberg-Marquardt with Marquardt diagonal scaling. Throws
/// RankDeficientError when the Jacobian at x0 is numerically rank deficient.
LmResult levenberg_marquardt(const ResidualFunction& f, const Eigen::VectorXd& x0, Eigen::Index residual_count,
                             const LmOptions& options = {});

}  // namespace csfq::fit
