#include "csfq/grid.hpp"

#include <cmath>

#include "csfq/constants.hpp"
#include "csfq/params.hpp"

namespace csfq::numeric {

using constants::pi;

GridSpec::GridSpec(int n) : n_(n) {
  if (n < 16 || n % 2 != 0) throw ParameterError("grid size must be even and at least 16");
}

double GridSpec::spacing() const { return 2.0 * pi / n_; }

double GridSpec::phase(int i) const { return -pi + i * spacing(); }

std::vector<double> GridSpec::phases() const {
  std::vector<double> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = phase(i);
  return out;
}

SpectralSecondDerivative::SpectralSecondDerivative(int n)
    : n_(n), data_(static_cast<std::size_t>(n) * n) {
  const double h = 2.0 * pi / n;
  const double diag = -pi * pi / (3.0 * h * h) - 1.0 / 6.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = diag;
      if (i != j) {
        const int k = i - j;
        const double s = std::sin(k * h / 2.0);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        v = -sign / (2.0 * s * s);
      }
      data_[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
}

}  // namespace csfq::numeric
