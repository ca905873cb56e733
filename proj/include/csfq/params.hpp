#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace csfq {

/// Raised when a parameter set violates a physical or model invariant.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// e^2 / (2 C h) in GHz for a capacitance in fF.
double charging_energy_from_capacitance(double capacitance_ff);

/// Inverse of charging_energy_from_capacitance.
double capacitance_from_charging_energy(double energy_ghz);

/// Raw circuit parameters of a capacitively shunted flux qubit.
///
/// Energies are E/h in GHz. `ec_ghz` is the charging energy of one large
/// junction, e^2/2C_J; it is only needed by the two-dimensional model.
struct QubitParams {
  double alpha = 0.0;
  double ej_ghz = 0.0;
  std::optional<double> ec_ghz;
  double cs_ff = 0.0;
};

/// A QubitParams that passed validate_params(). Every model takes this type,
/// so an unchecked parameter set cannot reach a formula.
class ValidatedQubit {
 public:
  const QubitParams& raw() const { return params_; }

  double alpha() const { return params_.alpha; }
  double ej_ghz() const { return params_.ej_ghz; }
  double cs_ff() const { return params_.cs_ff; }

  /// e^2 / 2C_S in GHz.
  double ecs_ghz() const { return ecs_ghz_; }

  bool has_junction_charging_energy() const { return params_.ec_ghz.has_value(); }
  /// Throws ParameterError when E_C was not supplied.
  double ec_ghz() const;
  double cj_ff() const;
  /// C_S / C_J.
  double beta() const;

  /// Set when alpha <= 1/8: the quartic coefficient (8 alpha - 1) is not
  /// positive and the perturbative anharmonicity is zero or negative.
  bool quartic_sign_warning() const { return quartic_sign_warning_; }

 private:
  friend ValidatedQubit validate_params(const QubitParams& params);
  explicit ValidatedQubit(const QubitParams& params);

  QubitParams params_;
  double ecs_ghz_ = 0.0;
  bool quartic_sign_warning_ = false;
};

ValidatedQubit validate_params(const QubitParams& params);

/// Normalized flux bias f = Phi / Phi_0. The optimal point is f = 0.5.
struct FluxBias {
  double f = 0.5;

  static constexpr double optimal = 0.5;
  double offset() const { return f - optimal; }
};

/// Cavity mode: bare frequency in GHz, loss rates in MHz (cyclic).
class CavityParams {
 public:
  CavityParams(double omega_c0_ghz, double kappa_c_mhz, double kappa_i_mhz);

  double omega_c0_ghz() const { return omega_c0_ghz_; }
  double kappa_c_mhz() const { return kappa_c_mhz_; }
  double kappa_i_mhz() const { return kappa_i_mhz_; }
  double kappa_mhz() const { return kappa_c_mhz_ + kappa_i_mhz_; }
  double quality_factor() const;

 private:
  double omega_c0_ghz_;
  double kappa_c_mhz_;
  double kappa_i_mhz_;
};

}  // namespace csfq
