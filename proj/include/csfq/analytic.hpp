#pragma once

// Perturbative model of the shunted flux qubit near the optimal point.
//
// The one-dimensional Hamiltonian at f = 0.5 is expanded to fourth order in
// phi_m and treated as a harmonic oscillator with a quartic perturbation.
// First-order perturbation theory gives the level ladder, the gap and the
// anharmonicity; the flux dependence enters through a term linear in
// (f - 0.5). All energies are E/h in GHz.

#include "csfq/params.hpp"

namespace csfq::analytic {

struct PerturbativeSpectrum {
  double gap_ghz = 0.0;              ///< E1 - E0 at f = 0.5
  double depsilon_df_ghz = 0.0;      ///< slope of epsilon(f), GHz per unit f
  double anharmonicity_ghz = 0.0;    ///< (E2 - E1) - (E1 - E0)
  double validity_ratio = 0.0;       ///< E_J (1 - 2 alpha) / E_CS
  bool low_validity_warning = false; ///< validity_ratio below the threshold
};

/// Below this value of E_J(1-2alpha)/E_CS the expansion is flagged.
inline constexpr double kValidityThreshold = 20.0;

/// E_J (1 - 2 alpha) / E_CS.
double validity_ratio(const ValidatedQubit& q);

/// Harmonic level spacing sqrt(4 E_CS E_J (1 - 2 alpha)).
double plasma_frequency(const ValidatedQubit& q);

/// First-order level E_m, including the constant 2 alpha E_J offset.
double perturbative_level(const ValidatedQubit& q, int m);

double gap(const ValidatedQubit& q);
double anharmonicity(const ValidatedQubit& q);

/// d epsilon / d f, GHz per unit normalized flux.
double epsilon_slope(const ValidatedQubit& q);
double epsilon(const ValidatedQubit& q, FluxBias f);

/// omega01(f) = Delta + 2 epsilon(f)^2 / Delta, GHz.
double omega01(const ValidatedQubit& q, FluxBias f);

/// d omega01 / d f in GHz per unit f (cyclic).
double domega01_df(const ValidatedQubit& q, FluxBias f);

PerturbativeSpectrum perturbative_spectrum(const ValidatedQubit& q);

/// Perturbative estimates of |<0|sin(phi_j/2)|1>| for one of the two large
/// junctions and for the small (shunted) junction.
struct JunctionMatrixElements {
  double large = 0.0;
  double small = 0.0;
};

JunctionMatrixElements junction_matrix_elements(const ValidatedQubit& q);

}  // namespace csfq::analytic
