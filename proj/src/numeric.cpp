#include "csfq/numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "csfq/constants.hpp"

#ifdef CSFQ_USE_OPENMP
#include <omp.h>
#endif

namespace csfq::numeric {

using constants::pi;

KineticCoefficients kinetic_coefficients(const ValidatedQubit& q) {
  const double ec = q.ec_ghz();
  return {2.0 * ec, 2.0 * ec / (1.0 + 2.0 * q.alpha() + 2.0 * q.beta())};
}

double potential_2d(const ValidatedQubit& q, FluxBias f, double phi_p, double phi_m) {
  const double ej = q.ej_ghz();
  return 2.0 * ej * (1.0 - std::cos(phi_p) * std::cos(phi_m)) +
         q.alpha() * ej * (1.0 - std::cos(2.0 * pi * f.f + 2.0 * phi_m));
}

double potential_1d(const ValidatedQubit& q, double phi) {
  const double ej = q.ej_ghz();
  return 2.0 * ej * (1.0 - std::cos(phi)) + q.alpha() * ej * (1.0 + std::cos(2.0 * phi));
}

HamiltonianOperator build_hamiltonian_2d(const ValidatedQubit& q, FluxBias f, const GridSpec& grid) {
  if (!std::isfinite(f.f)) throw ParameterError("flux bias must be finite");
  const KineticCoefficients kin = kinetic_coefficients(q);
  const int n = grid.n();
  std::vector<double> u(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p) {
    for (int m = 0; m < n; ++m) {
      u[static_cast<std::size_t>(p) * n + m] = potential_2d(q, f, grid.phase(p), grid.phase(m));
    }
  }
  return HamiltonianOperator::two_dimensional(grid, std::move(u), kin.plus, kin.minus, q.ej_ghz(), true);
}

HamiltonianOperator build_hamiltonian_1d(const ValidatedQubit& q, const GridSpec& grid) {
  std::vector<double> u(static_cast<std::size_t>(grid.n()));
  for (int i = 0; i < grid.n(); ++i) u[static_cast<std::size_t>(i)] = potential_1d(q, grid.phase(i));
  return HamiltonianOperator::one_dimensional(grid, std::move(u), q.ecs_ghz(), q.ej_ghz());
}

Spectrum spectrum_from(const EigenResult& result) { return Spectrum{result.eigenvalues}; }

double numeric_matrix_element(const EigenResult& result, const GridSpec& grid, Observable observable,
                              int state_i, int state_j) {
  const auto count = static_cast<int>(result.eigenvectors.size());
  if (state_i < 0 || state_j < 0 || state_i >= count || state_j >= count) {
    throw std::out_of_range("requested eigenstate was not computed");
  }
  const auto& a = result.eigenvectors[static_cast<std::size_t>(state_i)];
  const auto& b = result.eigenvectors[static_cast<std::size_t>(state_j)];
  if (a.size() != static_cast<std::size_t>(grid.n())) {
    throw std::invalid_argument("matrix elements need eigenvectors of a one-dimensional solve");
  }
  double sum = 0.0;
  for (int i = 0; i < grid.n(); ++i) {
    const double phi = grid.phase(i);
    double o = 0.0;
    switch (observable) {
      case Observable::sin_half_phi_m: o = std::sin(0.5 * phi); break;
      case Observable::cos_phi_m: o = std::cos(phi); break;
      case Observable::phi_m: o = phi; break;
    }
    sum += a[static_cast<std::size_t>(i)] * o * b[static_cast<std::size_t>(i)];
  }
  return std::abs(sum);
}

std::vector<FluxPoint> sweep_omega01_2d(const ValidatedQubit& q, const std::vector<double>& fluxes,
                                        const GridSpec& grid, const SweepOptions& options) {
  std::vector<FluxPoint> out(fluxes.size());
  const long count = static_cast<long>(fluxes.size());
  const LanczosOptions& lanczos = options.lanczos;
  // Nested regions inside a concurrent sweep run on one thread; the kernels'
  // arithmetic does not depend on the thread count, so results do not depend
  // on the worker count either.
  [[maybe_unused]] const bool concurrent = options.workers != 1 && count > 1;

  auto solve = [&](long i) {
    FluxPoint& pt = out[static_cast<std::size_t>(i)];
    pt.f = fluxes[static_cast<std::size_t>(i)];
    try {
      const HamiltonianOperator h = build_hamiltonian_2d(q, FluxBias{pt.f}, grid);
      const EigenResult r = lowest_eigenpairs(h, 3, lanczos);
      const Spectrum s = spectrum_from(r);
      pt.omega01_ghz = s.omega01();
      pt.omega12_ghz = s.omega12();
      pt.iterations = r.iterations;
    } catch (const std::exception& e) {
      pt.omega01_ghz = std::nan("");
      pt.omega12_ghz = std::nan("");
      pt.error = e.what();
    }
  };

#ifdef CSFQ_USE_OPENMP
  const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (concurrent)
  for (long i = 0; i < count; ++i) solve(i);
#else
  for (long i = 0; i < count; ++i) solve(i);
#endif
  return out;
}

std::vector<FluxPoint> numeric_omega01_vs_flux(const ValidatedQubit& q, const std::vector<double>& fluxes,
                                               const GridSpec& grid, const SweepOptions& options) {
  std::vector<FluxPoint> out = sweep_omega01_2d(q, fluxes, grid, options);
  for (const FluxPoint& pt : out) {
    if (!pt.ok()) throw std::runtime_error("flux " + std::to_string(pt.f) + ": " + pt.error);
  }
  return out;
}

}  // namespace csfq::numeric
