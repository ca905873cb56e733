#include "csfq/least_squares.hpp"

#include <algorithm>
#include <cmath>

namespace csfq::fit {

namespace {

Eigen::VectorXd evaluate(const ResidualFunction& f, const Eigen::VectorXd& x, Eigen::Index m) {
  Eigen::VectorXd r(m);
  f(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
    std::span<double>(r.data(), static_cast<std::size_t>(m)));
  return r;
}

double half_squared_norm(const Eigen::VectorXd& r) { return 0.5 * r.squaredNorm(); }

}  // namespace

Eigen::MatrixXd LmResult::covariance() const {
  const Eigen::Index m = residuals.size();
  const Eigen::Index n = params.size();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(n, n);
  if (m <= n) return cov;
  const double s2 = residuals.squaredNorm() / static_cast<double>(m - n);
  const Eigen::MatrixXd jtj = jacobian.transpose() * jacobian;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jtj, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = 1e-14 * (sv.size() > 0 ? sv(0) : 0.0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  }
  cov = s2 * svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
  return cov;
}

Eigen::MatrixXd numeric_jacobian(const ResidualFunction& f, const Eigen::VectorXd& x, Eigen::Index residual_count,
                                 double relative_step) {
  Eigen::MatrixXd jac(residual_count, x.size());
  Eigen::VectorXd xp = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double h = relative_step * std::max(std::abs(x(j)), 1e-3);
    xp(j) = x(j) + h;
    const Eigen::VectorXd rp = evaluate(f, xp, residual_count);
    xp(j) = x(j) - h;
    const Eigen::VectorXd rm = evaluate(f, xp, residual_count);
    xp(j) = x(j);
    jac.col(j) = (rp - rm) / (2.0 * h);
  }
  return jac;
}

LmResult levenberg_marquardt(const ResidualFunction& f, const Eigen::VectorXd& x0, Eigen::Index residual_count,
                             const LmOptions& options) {
  const Eigen::Index n = x0.size();
  if (residual_count < n) throw RankDeficientError("fewer residuals than parameters");

  LmResult res;
  res.params = x0;
  res.residuals = evaluate(f, x0, residual_count);
  res.cost = half_squared_norm(res.residuals);
  res.cost_history.push_back(res.cost);
  res.jacobian = numeric_jacobian(f, x0, residual_count, options.jacobian_step);

  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(res.jacobian);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv.size() == 0 || !(sv(sv.size() - 1) > options.rank_tolerance * sv(0))) {
      throw RankDeficientError("Jacobian is rank deficient at the initial point; the data do not constrain all parameters");
    }
  }

  double lambda = options.initial_damping;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    res.iterations = iter;
    const Eigen::MatrixXd& jac = res.jacobian;
    const Eigen::VectorXd grad = jac.transpose() * res.residuals;
    res.gradient_norm = grad.lpNorm<Eigen::Infinity>();
    if (res.gradient_norm < options.gradient_tolerance || res.cost == 0.0) {
      res.converged = true;
      res.stop_reason = "gradient below tolerance";
      return res;
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    Eigen::VectorXd scale = jtj.diagonal().cwiseMax(1e-300);

    bool accepted = false;
    while (!accepted) {
      Eigen::MatrixXd a = jtj;
      a.diagonal() += lambda * scale;
      const Eigen::VectorXd step = a.ldlt().solve(-grad);
      const bool small = step.norm() < options.step_tolerance * (res.params.norm() + options.step_tolerance);
      const Eigen::VectorXd trial = res.params + step;
      const Eigen::VectorXd r = evaluate(f, trial, residual_count);
      const double cost = half_squared_norm(r);
      if (std::isfinite(cost) && cost <= res.cost) {
        accepted = true;
        res.params = trial;
        res.residuals = r;
        res.cost = cost;
        res.cost_history.push_back(cost);
        lambda = std::max(lambda / 3.0, 1e-15);
        res.jacobian = numeric_jacobian(f, res.params, residual_count, options.jacobian_step);
      } else {
        lambda *= 4.0;
      }
      if (small) {
        res.converged = true;
        res.stop_reason = "relative step below tolerance";
        res.gradient_norm = (res.jacobian.transpose() * res.residuals).lpNorm<Eigen::Infinity>();
        return res;
      }
      if (!std::isfinite(lambda) || lambda > 1e300) {
        res.stop_reason = "damping overflow";
        return res;
      }
    }
  }
  res.gradient_norm = (res.jacobian.transpose() * res.residuals).lpNorm<Eigen::Infinity>();
  res.stop_reason = "iteration limit";
  return res;
}

}  // namespace csfq::fit
