#include "csfq/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

namespace csfq::numeric {

namespace {

constexpr std::size_t kBlock = 512;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

using Basis = std::vector<std::vector<double>>;

// w -= V (V^T w). Coefficients are independent dot products and the update
// is split into element blocks, so the arithmetic order does not depend on
// the thread count.
void orthogonalize(const Basis& basis, std::vector<double>& w, std::vector<double>& coeff, bool parallel) {
  const long count = static_cast<long>(basis.size());
  coeff.assign(basis.size(), 0.0);
#pragma omp parallel for schedule(static) if (parallel)
  for (long l = 0; l < count; ++l) coeff[l] = dot(basis[l], w);

  const std::size_t dim = w.size();
  const long blocks = static_cast<long>((dim + kBlock - 1) / kBlock);
#pragma omp parallel for schedule(static) if (parallel)
  for (long b = 0; b < blocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(dim, lo + kBlock);
    for (long l = 0; l < count; ++l) {
      const double c = coeff[l];
      const double* v = basis[l].data();
      for (std::size_t i = lo; i < hi; ++i) w[i] -= c * v[i];
    }
  }
}

// Ritz vector x = V s, normalized.
std::vector<double> ritz_vector(const Basis& basis, const Eigen::VectorXd& s, bool parallel) {
  const std::size_t dim = basis.front().size();
  std::vector<double> x(dim, 0.0);
  const long blocks = static_cast<long>((dim + kBlock - 1) / kBlock);
  const long count = static_cast<long>(basis.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (long b = 0; b < blocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(dim, lo + kBlock);
    for (long l = 0; l < count; ++l) {
      const double c = s(l);
      const double* v = basis[l].data();
      for (std::size_t i = lo; i < hi; ++i) x[i] += c * v[i];
    }
  }
  const double nx = norm(x);
  for (double& xi : x) xi /= nx;
  return x;
}

struct RitzCheck {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  std::vector<double> estimates;
};

RitzCheck tridiagonal_ritz(const std::vector<double>& alpha, const std::vector<double>& beta, int k) {
  const Eigen::Index m = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(std::max<Eigen::Index>(m - 1, 0));
  for (Eigen::Index i = 0; i < m; ++i) diag(i) = alpha[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < m; ++i) sub(i) = beta[static_cast<std::size_t>(i)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  RitzCheck out{es.eigenvalues(), es.eigenvectors(), {}};
  const double last_beta = beta.size() >= alpha.size() ? beta[alpha.size() - 1] : 0.0;
  for (int i = 0; i < std::min<int>(k, static_cast<int>(m)); ++i) {
    out.estimates.push_back(std::abs(last_beta * out.vectors(m - 1, i)));
  }
  return out;
}

}  // namespace

std::vector<double> lanczos_start_vector(const HamiltonianOperator& h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> v(h.dim());
  // Raw engine output mapped to [-0.5, 0.5); std::uniform_real_distribution
  // is implementation-defined and would break cross-platform determinism.
  for (double& x : v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
  h.project(v);
  const double nv = norm(v);
  for (double& x : v) x /= nv;
  return v;
}

EigenResult lowest_eigenpairs(const HamiltonianOperator& h, int k, const LanczosOptions& options) {
  if (k < 1 || k > kMaxEigenpairs) throw std::invalid_argument("eigenpair count must be in [1, 10]");
  const bool parallel = options.execution == Execution::parallel;
  const double tol = options.tolerance * h.energy_scale();
  const std::size_t sector_dim = h.half_cell_symmetric() ? h.dim() / 2 : h.dim();
  if (static_cast<std::size_t>(k) > sector_dim) throw std::invalid_argument("more eigenpairs than dimensions");
  const int max_steps = static_cast<int>(std::min<std::size_t>(options.max_iterations, sector_dim));

  Basis basis;
  basis.push_back(lanczos_start_vector(h, options.seed));
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> w(h.dim());
  std::vector<double> coeff;
  std::vector<double> best(static_cast<std::size_t>(k), std::numeric_limits<double>::infinity());

  for (int step = 1; step <= max_steps; ++step) {
    const std::vector<double>& v = basis.back();
    h.apply(v, w, options.execution);
    h.project(w);
    alpha.push_back(dot(v, w));
    orthogonalize(basis, w, coeff, parallel);
    orthogonalize(basis, w, coeff, parallel);
    h.project(w);
    const double b = norm(w);
    beta.push_back(b);

    const bool exhausted = b <= 1e-13 * h.energy_scale() || step == max_steps;
    const bool check = step >= k && (step % options.check_interval == 0 || exhausted);
    if (check) {
      RitzCheck ritz = tridiagonal_ritz(alpha, beta, k);
      bool estimated = true;
      for (int i = 0; i < k; ++i) {
        best[static_cast<std::size_t>(i)] = std::min(best[static_cast<std::size_t>(i)], ritz.estimates[static_cast<std::size_t>(i)]);
        if (!(ritz.estimates[static_cast<std::size_t>(i)] < tol)) estimated = false;
      }
      if (estimated || exhausted) {
        EigenResult result;
        result.iterations = step;
        std::vector<double> hx(h.dim());
        bool verified = true;
        for (int i = 0; i < k; ++i) {
          std::vector<double> x = ritz_vector(basis, ritz.vectors.col(i), parallel);
          h.apply(x, hx, options.execution);
          const double theta = ritz.values(i);
          double r2 = 0.0;
          for (std::size_t j = 0; j < x.size(); ++j) {
            const double d = hx[j] - theta * x[j];
            r2 += d * d;
          }
          const double r = std::sqrt(r2);
          if (!(r < tol)) verified = false;
          result.eigenvalues.push_back(theta);
          result.eigenvectors.push_back(std::move(x));
          result.residual_norms.push_back(r);
        }
        if (verified) return result;
        if (exhausted) {
          throw ConvergenceError("Lanczos: Krylov space exhausted before residuals converged",
                                 result.residual_norms, step);
        }
      }
    }
    if (exhausted) break;
    for (double& x : w) x /= b;
    basis.push_back(w);
  }
  throw ConvergenceError("Lanczos: no convergence after " + std::to_string(max_steps) + " iterations", best,
                         max_steps);
}

}  // namespace csfq::numeric
