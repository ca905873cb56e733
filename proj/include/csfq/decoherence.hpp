#pragma once

// Forward models of the decoherence channels.
//
// Unit conventions (fixed per formula, never mixed within one):
//   * quasiparticle and flux-noise rates use angular frequencies: energies
//     E/h in GHz become E/hbar = 2 pi * 1e9 * E in 1/s;
//   * the thermal-photon rate reads kappa and chi in MHz as cyclic rates
//     (MHz * 1e6 per second), matching cqed::purcell_t1.

#include <numbers>
#include <vector>

#include "csfq/analytic.hpp"
#include "csfq/params.hpp"

namespace csfq::decoherence {

// ---------------------------------------------------------------------------
// Quasiparticle tunneling

inline constexpr double kDefaultGapMicroeV = 200.0;
/// Cooper-pair density of aluminium, per um^3.
inline constexpr double kDefaultCooperPairDensity = 4.9e6;

struct QuasiparticleEnv {
  double x_qp = 0.0;
  double delta0_uev = kDefaultGapMicroeV;
  double n_cp_per_um3 = kDefaultCooperPairDensity;

  /// Throws ParameterError when x_qp < 0 or a density/gap is not positive.
  void validate() const;
};

/// n_qp = 2 x_qp n_cp, per um^3.
double nqp_from_xqp(const QuasiparticleEnv& env);

/// x_qp = n_qp / (2 n_cp).
double xqp_from_nqp(double n_qp_per_um3, double n_cp_per_um3 = kDefaultCooperPairDensity);

/// Individual terms of the quasiparticle relaxation rate, all in 1/s.
struct QpRateTerms {
  double prefactor = 0.0;             ///< A_sum = sum_j |m_j|^2 E_J^(j) / hbar
  double nonequilibrium = 0.0;        ///< Gamma_neq,1->0
  double equilibrium_down = 0.0;      ///< Gamma_eq,1->0
  double equilibrium_up = 0.0;        ///< Gamma_eq,0->1 = e^{-hw/kT} Gamma_eq,1->0
  double total = 0.0;
  bool frequency_not_small = false;   ///< hbar omega01 not << Delta0
  bool temperature_not_small = false; ///< k_B T not << Delta0
};

/// A_sum for two large junctions at E_J and one small junction at alpha E_J.
double qp_prefactor(const ValidatedQubit& q, const analytic::JunctionMatrixElements& m);

QpRateTerms qp_rate_terms(const ValidatedQubit& q, double omega01_ghz, const QuasiparticleEnv& env,
                          double temperature_k, const analytic::JunctionMatrixElements& m);

/// Gamma = 1/T1 from quasiparticle tunneling, 1/s. Throws ParameterError for
/// temperature_k <= 0.
double qp_relaxation_rate(const ValidatedQubit& q, double omega01_ghz, const QuasiparticleEnv& env,
                          double temperature_k, const analytic::JunctionMatrixElements& m);

// ---------------------------------------------------------------------------
// Thermal photons

inline constexpr double kLoadResistanceOhm = 50.0;

struct AttenuationStage {
  double temperature_k = 0.0;
  double weight = 0.0;
};

/// Noise sources and their total attenuation towards the cavity.
struct AttenuationChain {
  std::vector<AttenuationStage> stages;
  double resistance_ohm = kLoadResistanceOhm;

  void validate() const;
  double max_temperature() const;
};

/// Thermal voltage noise of a resistor without zero-point term,
/// 4 k_B T R (hw/k_B T) / (e^{hw/k_B T} - 1), in V^2/Hz.
double johnson_noise_psd(double omega_ghz, double temperature_k, double resistance_ohm = kLoadResistanceOhm);

/// sum_i A_i S_vv(omega, T_i).
double chain_noise_psd(const AttenuationChain& chain, double omega_ghz);

struct EffectiveTemperature {
  double kelvin = 0.0;
  /// The target noise lies below S_vv at the 1 mK lower bracket.
  bool clamped_low = false;
  /// |S(T_eff) - target| / target.
  double relative_residual = 0.0;
};

inline constexpr double kMinEffectiveTemperature = 1e-3;

/// Solves S_vv(omega, T) = target by bisection on [1 mK, t_max].
EffectiveTemperature temperature_for_noise(double target_psd, double omega_ghz, double t_max,
                                           double resistance_ohm = kLoadResistanceOhm);

/// T_eff with S_vv(omega_c, T_eff) = sum_i A_i S_vv(omega_c, T_i).
EffectiveTemperature effective_temperature(const AttenuationChain& chain, double omega_c_ghz);

/// Bose occupation 1 / (e^{h f / k_B T} - 1).
double thermal_photon_population(double omega_c_ghz, double temperature_k);

/// kappa^2 / (kappa^2 + 4 chi^2) * 4 chi^2 / kappa * nbar, in 1/s with the
/// cyclic-rate reading of kappa and chi (MHz).
double thermal_dephasing_rate(double kappa_mhz, double chi_mhz, double nbar);

// ---------------------------------------------------------------------------
// 1/f flux noise

/// Single-point acquisition time that sets the infrared cutoff, s.
inline constexpr double kDefaultAcquisitionTime = 2.45;
inline constexpr double kDefaultInfraredCutoff = 2.0 * std::numbers::pi / kDefaultAcquisitionTime;

struct FluxNoise {
  /// S(omega) = A_phi / omega, in Phi_0^2.
  double a_phi = 0.0;
  /// Infrared cutoff in rad/s; default 2 pi / (2.45 s acquisition time).
  double omega_ir = kDefaultInfraredCutoff;

  /// A_phi from an amplitude quoted in micro-Phi_0.
  static FluxNoise from_micro_flux_quanta(double amplitude_uphi0);
  void validate() const;
};

struct FluxDephasing {
  double echo = 0.0;    ///< Gamma_phi,E in 1/s
  double ramsey = 0.0;  ///< Gamma_phi,R in 1/s
};

/// Gaussian pure-dephasing rates for echo and Ramsey at free-evolution time
/// t. domega_df is the cyclic slope in GHz per unit f. Throws
/// ParameterError when omega_ir * t >= 1.
FluxDephasing flux_dephasing_rates(const FluxNoise& noise, double domega_df_ghz, double t_s);

/// sqrt(ln(1/(omega_ir t)) / ln 2).
double ramsey_echo_ratio(double omega_ir, double t_s);

// ---------------------------------------------------------------------------
// Decay envelopes

enum class EnvelopeShape { gaussian, exponential };

/// e^{-t/2T1} e^{-(Gamma t)^2} (gaussian) or e^{-t/2T1} e^{-Gamma t} (exponential).
double decay_envelope(double t_s, double t1_s, double gamma_phi, EnvelopeShape shape);

/// Time at which decay_envelope falls to 1/e, found numerically.
double envelope_decay_time(double t1_s, double gamma_phi, EnvelopeShape shape);

}  // namespace csfq::decoherence
