#pragma once

// Grid models of the shunted flux qubit.
//
// Two-dimensional model in (phi_p, phi_m) = ((phi1 + phi2)/2, (phi1 - phi2)/2):
//
//   U = 2 E_J (1 - cos phi_p cos phi_m) + alpha E_J (1 - cos(2 pi f + 2 phi_m))
//   K = E_p n_p^2 + E_m n_m^2,  E_p = 2 E_C,  E_m = 2 E_C / (1 + 2 alpha + 2 beta)
//
// with beta = C_S / C_J. For beta -> infinity, E_m -> E_CS and dropping the
// phi_p terms at f = 0.5 leaves the one-dimensional model
//
//   H = E_CS n^2 + 2 E_J (1 - cos phi) + alpha E_J (1 + cos 2 phi).

#include <optional>
#include <string>
#include <vector>

#include "csfq/hamiltonian.hpp"
#include "csfq/lanczos.hpp"
#include "csfq/params.hpp"

namespace csfq::numeric {

/// Kinetic coefficients of the two-dimensional model, GHz.
struct KineticCoefficients {
  double plus = 0.0;   ///< E_p
  double minus = 0.0;  ///< E_m
};

KineticCoefficients kinetic_coefficients(const ValidatedQubit& q);

/// U(phi_p, phi_m) of the two-dimensional model, GHz.
double potential_2d(const ValidatedQubit& q, FluxBias f, double phi_p, double phi_m);

/// U(phi) of the one-dimensional optimal-point model, GHz.
double potential_1d(const ValidatedQubit& q, double phi);

/// Requires E_C in the parameter set.
HamiltonianOperator build_hamiltonian_2d(const ValidatedQubit& q, FluxBias f, const GridSpec& grid);

HamiltonianOperator build_hamiltonian_1d(const ValidatedQubit& q, const GridSpec& grid);

/// Lowest levels and the derived transition frequencies of one solve.
struct Spectrum {
  std::vector<double> levels_ghz;

  double omega01() const { return levels_ghz.at(1) - levels_ghz.at(0); }
  double omega12() const { return levels_ghz.at(2) - levels_ghz.at(1); }
  double anharmonicity() const { return omega12() - omega01(); }
};

Spectrum spectrum_from(const EigenResult& result);

enum class Observable {
  sin_half_phi_m,  ///< sin(phi_m / 2): the large junctions
  cos_phi_m,       ///< cos(phi_m) = sin(phi_3 / 2) at f = 0.5: the small junction
  phi_m,           ///< odd test observable
};

/// |<psi_i| O |psi_j>| by grid quadrature on eigenvectors of a 1D solve.
/// Throws std::out_of_range when a requested state was not computed.
double numeric_matrix_element(const EigenResult& result, const GridSpec& grid, Observable observable,
                              int state_i = 0, int state_j = 1);

/// One point of a flux sweep. `error` is empty on success.
struct FluxPoint {
  double f = 0.0;
  double omega01_ghz = 0.0;
  double omega12_ghz = 0.0;
  int iterations = 0;
  std::string error;

  bool ok() const { return error.empty(); }
};

struct SweepOptions {
  /// Concurrent flux points; 0 uses the OpenMP default.
  int workers = 1;
  LanczosOptions lanczos{};
};

/// Two-dimensional solve at every flux value; failures are recorded per
/// point and never abort the sweep. Output order follows the input order.
std::vector<FluxPoint> sweep_omega01_2d(const ValidatedQubit& q, const std::vector<double>& fluxes,
                                        const GridSpec& grid, const SweepOptions& options = {});

/// As sweep_omega01_2d, but throws std::runtime_error naming the first
/// failing flux value.
std::vector<FluxPoint> numeric_omega01_vs_flux(const ValidatedQubit& q, const std::vector<double>& fluxes,
                                               const GridSpec& grid, const SweepOptions& options = {});

}  // namespace csfq::numeric
