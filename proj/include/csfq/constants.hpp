#pragma once

// Physical constants (SI, exact CODATA 2018 values) and the unit conversions
// used throughout the library.
//
// Conventions:
//   * energies and frequencies are cyclic frequencies E/h, in GHz unless the
//     name says otherwise (MHz for cavity rates, couplings and shifts);
//   * rates are in 1/s;
//   * temperatures are in kelvin, the superconducting gap in micro-eV.

#include <numbers>

namespace csfq::constants {

inline constexpr double pi = std::numbers::pi;

/// h [J s]
inline constexpr double planck = 6.62607015e-34;
/// hbar = h / 2pi [J s]
inline constexpr double hbar = planck / (2.0 * pi);
/// e [C]
inline constexpr double elementary_charge = 1.602176634e-19;
/// k_B [J/K]
inline constexpr double boltzmann = 1.380649e-23;
/// Phi_0 = h / 2e [Wb]
inline constexpr double flux_quantum = planck / (2.0 * elementary_charge);

}  // namespace csfq::constants

namespace csfq::units {

double ghz_to_joule(double ghz);
double joule_to_ghz(double joule);

/// k_B T / h in GHz.
double kelvin_to_ghz(double kelvin);
double ghz_to_kelvin(double ghz);

double microev_to_ghz(double microev);

/// Cyclic GHz to angular frequency in rad/s.
double ghz_to_rad_per_s(double ghz);

/// Cyclic MHz read directly as a rate in 1/s (MHz * 1e6). This is the
/// convention used for the Purcell and thermal-photon formulas.
double mhz_to_cyclic_rate(double mhz);

}  // namespace csfq::units
