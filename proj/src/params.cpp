#include "csfq/params.hpp"

#include <cmath>

#include "csfq/constants.hpp"

namespace csfq {

using namespace csfq::constants;

double charging_energy_from_capacitance(double capacitance_ff) {
  if (!(capacitance_ff > 0.0) || !std::isfinite(capacitance_ff)) {
    throw ParameterError("capacitance must be positive and finite");
  }
  const double c = capacitance_ff * 1e-15;
  return elementary_charge * elementary_charge / (2.0 * c * planck) * 1e-9;
}

double capacitance_from_charging_energy(double energy_ghz) {
  if (!(energy_ghz > 0.0) || !std::isfinite(energy_ghz)) {
    throw ParameterError("charging energy must be positive and finite");
  }
  return elementary_charge * elementary_charge / (2.0 * energy_ghz * 1e9 * planck) * 1e15;
}

ValidatedQubit::ValidatedQubit(const QubitParams& params)
    : params_(params),
      ecs_ghz_(charging_energy_from_capacitance(params.cs_ff)),
      quartic_sign_warning_(params.alpha <= 0.125) {}

double ValidatedQubit::ec_ghz() const {
  if (!params_.ec_ghz) throw ParameterError("junction charging energy E_C not specified");
  return *params_.ec_ghz;
}

double ValidatedQubit::cj_ff() const { return capacitance_from_charging_energy(ec_ghz()); }

double ValidatedQubit::beta() const { return params_.cs_ff / cj_ff(); }

ValidatedQubit validate_params(const QubitParams& params) {
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(params.alpha) || !finite(params.ej_ghz) || !finite(params.cs_ff)) {
    throw ParameterError("qubit parameters must be finite");
  }
  if (params.alpha >= 0.5) throw ParameterError("alpha >= 0.5: double-well regime unsupported");
  if (params.alpha <= 0.0) throw ParameterError("alpha must be positive");
  if (params.ej_ghz <= 0.0) throw ParameterError("E_J must be positive");
  if (params.cs_ff <= 0.0) throw ParameterError("C_S must be positive");
  if (params.ec_ghz && !(*params.ec_ghz > 0.0 && finite(*params.ec_ghz))) {
    throw ParameterError("E_C must be positive");
  }
  return ValidatedQubit(params);
}

CavityParams::CavityParams(double omega_c0_ghz, double kappa_c_mhz, double kappa_i_mhz)
    : omega_c0_ghz_(omega_c0_ghz), kappa_c_mhz_(kappa_c_mhz), kappa_i_mhz_(kappa_i_mhz) {
  if (!(omega_c0_ghz > 0.0)) throw ParameterError("cavity frequency must be positive");
  if (!(kappa_c_mhz >= 0.0) || !(kappa_i_mhz >= 0.0)) {
    throw ParameterError("cavity loss rates must be non-negative");
  }
  if (!(kappa_c_mhz + kappa_i_mhz > 0.0)) throw ParameterError("total cavity linewidth must be positive");
}

double CavityParams::quality_factor() const { return omega_c0_ghz_ * 1e3 / kappa_mhz(); }

}  // namespace csfq
