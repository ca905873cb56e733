#include "csfq/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

#include "csfq/params.hpp"

namespace csfq::numeric {

HamiltonianOperator::HamiltonianOperator(const GridSpec& grid, int rows, std::vector<double> potential,
                                         double kinetic_p, double kinetic_m, double energy_scale,
                                         bool half_cell_symmetric)
    : grid_(grid),
      rows_(rows),
      potential_(std::move(potential)),
      kinetic_p_(kinetic_p),
      kinetic_m_(kinetic_m),
      energy_scale_(energy_scale),
      half_cell_symmetric_(half_cell_symmetric),
      d2_(grid.n()) {
  if (potential_.size() != static_cast<std::size_t>(rows_) * grid_.n()) {
    throw ParameterError("potential size does not match the grid");
  }
  if (kinetic_p_ < 0.0 || kinetic_m_ < 0.0) throw ParameterError("kinetic coefficients must be non-negative");
  if (!(energy_scale_ > 0.0)) throw ParameterError("energy scale must be positive");
}

HamiltonianOperator HamiltonianOperator::one_dimensional(const GridSpec& grid, std::vector<double> potential,
                                                         double kinetic, double energy_scale) {
  return HamiltonianOperator(grid, 1, std::move(potential), 0.0, kinetic, energy_scale, false);
}

HamiltonianOperator HamiltonianOperator::two_dimensional(const GridSpec& grid, std::vector<double> potential,
                                                         double kinetic_p, double kinetic_m,
                                                         double energy_scale, bool half_cell_symmetric) {
  return HamiltonianOperator(grid, grid.n(), std::move(potential), kinetic_p, kinetic_m, energy_scale,
                             half_cell_symmetric);
}

void HamiltonianOperator::apply(std::span<const double> x, std::span<double> y, Execution exec) const {
  if (exec == Execution::parallel) {
    apply_parallel(x, y);
  } else {
    apply_serial(x, y);
  }
}

void HamiltonianOperator::apply_serial(std::span<const double> x, std::span<double> y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("vector size mismatch");
  const int n = cols();
  for (int p = 0; p < rows_; ++p) {
    for (int m = 0; m < n; ++m) {
      const std::size_t idx = static_cast<std::size_t>(p) * n + m;
      double acc = potential_[idx] * x[idx];
      if (rows_ > 1) {
        for (int q = 0; q < rows_; ++q) {
          acc -= kinetic_p_ * d2_(p, q) * x[static_cast<std::size_t>(q) * n + m];
        }
      }
      for (int k = 0; k < n; ++k) {
        acc -= kinetic_m_ * d2_(m, k) * x[static_cast<std::size_t>(p) * n + k];
      }
      y[idx] = acc;
    }
  }
}

void HamiltonianOperator::apply_parallel(std::span<const double> x, std::span<double> y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("vector size mismatch");
  const int n = cols();
  const int rows = rows_;
  const double* xs = x.data();
  double* ys = y.data();
  const double ep = kinetic_p_;
  const double em = kinetic_m_;

#pragma omp parallel for schedule(static) if (rows > 1)
  for (int p = 0; p < rows; ++p) {
    double* yp = ys + static_cast<std::size_t>(p) * n;
    const double* xp = xs + static_cast<std::size_t>(p) * n;
    const double* up = potential_.data() + static_cast<std::size_t>(p) * n;
    for (int m = 0; m < n; ++m) yp[m] = up[m] * xp[m];
    if (rows > 1) {
      const double* dp = d2_.row(p);
      for (int q = 0; q < rows; ++q) {
        const double c = -ep * dp[q];
        const double* xq = xs + static_cast<std::size_t>(q) * n;
#pragma omp simd
        for (int m = 0; m < n; ++m) yp[m] += c * xq[m];
      }
    }
    for (int m = 0; m < n; ++m) {
      const double* dm = d2_.row(m);
      double acc = 0.0;
#pragma omp simd reduction(+ : acc)
      for (int k = 0; k < n; ++k) acc += dm[k] * xp[k];
      yp[m] -= em * acc;
    }
  }
}

void HamiltonianOperator::project(std::span<double> x) const {
  if (!half_cell_symmetric_) return;
  if (x.size() != dim()) throw std::invalid_argument("vector size mismatch");
  const int n = cols();
  const int half = n / 2;
  // The shift T: (p, m) -> (p + n/2, m + n/2) is an involution, so visiting
  // only the first half of the rows touches each pair exactly once.
  for (int p = 0; p < half; ++p) {
    const int ps = p + half;
    for (int m = 0; m < n; ++m) {
      const int ms = (m + half) % n;
      double& a = x[static_cast<std::size_t>(p) * n + m];
      double& b = x[static_cast<std::size_t>(ps) * n + ms];
      const double avg = 0.5 * (a + b);
      a = avg;
      b = avg;
    }
  }
}

}  // namespace csfq::numeric
