#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "csfq/grid.hpp"

namespace csfq::numeric {

enum class Execution { serial, parallel };

/// Real symmetric grid Hamiltonian
///
///     H = U(phi_p, phi_m) - E_p d^2/dphi_p^2 - E_m d^2/dphi_m^2
///
/// stored matrix-free: a diagonal potential plus spectral kinetic terms along
/// each axis. Vectors are laid out row-major as x[p * cols + m]. A
/// one-dimensional operator has a single row and no phi_p kinetic term.
///
/// The two-dimensional cell [-pi, pi)^2 covers the junction-phase torus
/// twice: (phi_p, phi_m) and (phi_p + pi, phi_m + pi) are the same physical
/// point. Such operators carry a half-cell symmetry and project() maps a
/// vector onto the physical (shift-symmetric) sector.
class HamiltonianOperator {
 public:
  static HamiltonianOperator one_dimensional(const GridSpec& grid, std::vector<double> potential,
                                             double kinetic, double energy_scale);

  static HamiltonianOperator two_dimensional(const GridSpec& grid, std::vector<double> potential,
                                             double kinetic_p, double kinetic_m, double energy_scale,
                                             bool half_cell_symmetric);

  std::size_t dim() const { return potential_.size(); }
  int rows() const { return rows_; }
  int cols() const { return grid_.n(); }
  const GridSpec& grid() const { return grid_; }

  const std::vector<double>& potential() const { return potential_; }
  double kinetic_p() const { return kinetic_p_; }
  double kinetic_m() const { return kinetic_m_; }
  /// Natural energy unit (E_J) used to scale convergence tolerances.
  double energy_scale() const { return energy_scale_; }
  bool half_cell_symmetric() const { return half_cell_symmetric_; }

  /// y = H x.
  void apply(std::span<const double> x, std::span<double> y,
             Execution exec = Execution::parallel) const;

  /// Straightforward element-by-element product; reference for the kernel.
  void apply_serial(std::span<const double> x, std::span<double> y) const;

  /// Row-blocked OpenMP kernel.
  void apply_parallel(std::span<const double> x, std::span<double> y) const;

  /// Projects onto the physical sector (no-op without half-cell symmetry).
  void project(std::span<double> x) const;

 private:
  HamiltonianOperator(const GridSpec& grid, int rows, std::vector<double> potential, double kinetic_p,
                      double kinetic_m, double energy_scale, bool half_cell_symmetric);

  GridSpec grid_;
  int rows_;
  std::vector<double> potential_;
  double kinetic_p_;
  double kinetic_m_;
  double energy_scale_;
  bool half_cell_symmetric_;
  SpectralSecondDerivative d2_;
};

}  // namespace csfq::numeric
