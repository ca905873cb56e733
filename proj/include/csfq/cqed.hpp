#pragma once

// Dispersive cavity QED quantities.
//
// Units: qubit and cavity frequencies in GHz, couplings and shifts in MHz,
// all cyclic. chi_ij = g_ij^2 / (omega_ij - omega_c0), so a qubit below the
// cavity gives negative partial shifts and a dressed cavity frequency
// omega_c = omega_c0 - chi01 above the bare one.
//
// Rate convention: kappa in MHz is read as kappa * 1e6 per second (no 2 pi).
// This cyclic-rate reading is the one that reproduces the quoted Purcell and
// thermal-photon times; the angular reading gives times 2 pi shorter.

#include <stdexcept>

namespace csfq::cqed {

/// Dispersive validity: g / |detuning| above this is flagged.
inline constexpr double kDispersiveWarningRatio = 0.2;

class CqedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PartialShift {
  double chi_mhz = 0.0;
  /// g / |omega_ij - omega_c0|
  double coupling_ratio = 0.0;
  bool outside_dispersive = false;
};

/// chi_ij = g^2 / (omega_ij - omega_c0). Throws CqedError at zero detuning.
PartialShift chi_partial(double g_mhz, double omega_ij_ghz, double omega_c0_ghz);

/// chi = chi01 - chi12 / 2; the state-dependent cavity splitting is 2 chi.
double total_pull(double chi01_mhz, double chi12_mhz);

/// Shifts, pull and couplings of one qubit-cavity configuration.
struct DispersiveSet {
  double chi01_mhz = 0.0;
  double chi12_mhz = 0.0;
  double chi_mhz = 0.0;
  double g01_mhz = 0.0;
  double g12_mhz = 0.0;

  double cavity_pull_mhz() const { return 2.0 * chi_mhz; }
};

/// Forward model: shifts from couplings.
DispersiveSet dispersive_set(double g01_mhz, double g12_mhz, double omega01_ghz, double omega12_ghz,
                             double omega_c0_ghz);

/// Inverse model: couplings from the measured bare and dressed cavity
/// frequencies and the pull chi. Throws CqedError when a radicand is
/// negative (inconsistent inputs).
DispersiveSet extract_couplings(double omega01_ghz, double omega12_ghz, double omega_c0_ghz,
                                double omega_c_ghz, double chi_mhz);

/// Purcell-limited T1 = 1 / (kappa g01^2 / (omega01 - omega_c)^2) in seconds,
/// cyclic-rate convention. Returns +infinity for g01 = 0.
double purcell_t1(double kappa_mhz, double g01_mhz, double omega01_ghz, double omega_c_ghz);

}  // namespace csfq::cqed
