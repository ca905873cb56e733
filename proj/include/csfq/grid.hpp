#pragma once

#include <cstddef>
#include <vector>

namespace csfq::numeric {

/// Uniform periodic phase grid on [-pi, pi) with n points per axis.
class GridSpec {
 public:
  static constexpr int kDefaultPoints = 80;

  /// Throws ParameterError unless n >= 16 and even.
  explicit GridSpec(int n = kDefaultPoints);

  int n() const { return n_; }
  double spacing() const;
  /// Phase of grid index i: -pi + i * spacing().
  double phase(int i) const;
  std::vector<double> phases() const;

 private:
  int n_;
};

/// Fourier (spectral) second-derivative matrix on a periodic grid of even
/// size n, stored row-major. It differentiates the trigonometric interpolant
/// exactly: applied to exp(i m phi) with |m| < n/2 it returns -m^2 times the
/// mode. The matrix is symmetric and negative semidefinite.
class SpectralSecondDerivative {
 public:
  explicit SpectralSecondDerivative(int n);

  int n() const { return n_; }
  double operator()(int row, int col) const { return data_[static_cast<std::size_t>(row) * n_ + col]; }
  const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * n_; }

 private:
  int n_;
  std::vector<double> data_;
};

}  // namespace csfq::numeric
