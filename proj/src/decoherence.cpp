#include "csfq/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "csfq/constants.hpp"
#include "csfq/special.hpp"

namespace csfq::decoherence {

namespace {

using std::numbers::pi;

// Validity flags trip when the ratio to Delta0 exceeds this.
constexpr double kSmallnessRatio = 0.2;

// Bisection to full double precision.
template <class F>
double bisect_root(F f, double lo, double hi) {
  boost::uintmax_t max_iter = 200;
  const auto r = boost::math::tools::bisect(f, lo, hi, boost::math::tools::eps_tolerance<double>(52), max_iter);
  return 0.5 * (r.first + r.second);
}

}  // namespace

void QuasiparticleEnv::validate() const {
  if (!(x_qp >= 0.0) || !std::isfinite(x_qp)) throw ParameterError("x_qp must be non-negative");
  if (!(delta0_uev > 0.0)) throw ParameterError("superconducting gap must be positive");
  if (!(n_cp_per_um3 > 0.0)) throw ParameterError("Cooper-pair density must be positive");
}

double nqp_from_xqp(const QuasiparticleEnv& env) {
  env.validate();
  return 2.0 * env.x_qp * env.n_cp_per_um3;
}

double xqp_from_nqp(double n_qp_per_um3, double n_cp_per_um3) {
  if (!(n_qp_per_um3 >= 0.0)) throw ParameterError("n_qp must be non-negative");
  if (!(n_cp_per_um3 > 0.0)) throw ParameterError("Cooper-pair density must be positive");
  return n_qp_per_um3 / (2.0 * n_cp_per_um3);
}

double qp_prefactor(const ValidatedQubit& q, const analytic::JunctionMatrixElements& m) {
  const double ej = q.ej_ghz();
  const double weighted = 2.0 * m.large * m.large * ej + m.small * m.small * q.alpha() * ej;
  return units::ghz_to_rad_per_s(weighted);
}

QpRateTerms qp_rate_terms(const ValidatedQubit& q, double omega01_ghz, const QuasiparticleEnv& env,
                          double temperature_k, const analytic::JunctionMatrixElements& m) {
  env.validate();
  if (!(temperature_k > 0.0)) throw ParameterError("temperature must be positive");
  if (!(omega01_ghz > 0.0)) throw ParameterError("qubit frequency must be positive");

  const double gap = units::microev_to_ghz(env.delta0_uev);
  const double kt = units::kelvin_to_ghz(temperature_k);
  const double x = omega01_ghz / kt;

  QpRateTerms t;
  t.prefactor = qp_prefactor(q, m);
  t.nonequilibrium = t.prefactor * (8.0 / pi) * env.x_qp * std::sqrt(2.0 * gap / omega01_ghz);
  // e^{x/2} K0(x/2) evaluated as one scaled Bessel call
  t.equilibrium_down = t.prefactor * (16.0 / pi) * std::exp(-gap / kt) * special::bessel_k0_scaled(0.5 * x);
  t.equilibrium_up = t.equilibrium_down * std::exp(-x);
  t.total = t.nonequilibrium + t.equilibrium_down + t.equilibrium_up;
  t.frequency_not_small = omega01_ghz > kSmallnessRatio * gap;
  t.temperature_not_small = kt > kSmallnessRatio * gap;
  return t;
}

double qp_relaxation_rate(const ValidatedQubit& q, double omega01_ghz, const QuasiparticleEnv& env,
                          double temperature_k, const analytic::JunctionMatrixElements& m) {
  return qp_rate_terms(q, omega01_ghz, env, temperature_k, m).total;
}

void AttenuationChain::validate() const {
  if (stages.empty()) throw ParameterError("attenuation chain is empty");
  bool any = false;
  for (const AttenuationStage& s : stages) {
    if (!(s.temperature_k > 0.0)) throw ParameterError("stage temperatures must be positive");
    if (!(s.weight >= 0.0)) throw ParameterError("attenuation weights must be non-negative");
    any = any || s.weight > 0.0;
  }
  if (!any) throw ParameterError("attenuation weights are all zero");
  if (!(resistance_ohm > 0.0)) throw ParameterError("load resistance must be positive");
}

double AttenuationChain::max_temperature() const {
  double t = 0.0;
  for (const AttenuationStage& s : stages) t = std::max(t, s.temperature_k);
  return t;
}

double johnson_noise_psd(double omega_ghz, double temperature_k, double resistance_ohm) {
  if (!(temperature_k > 0.0)) return 0.0;
  const double x = omega_ghz / units::kelvin_to_ghz(temperature_k);
  return 4.0 * constants::boltzmann * temperature_k * resistance_ohm * (x / std::expm1(x));
}

double chain_noise_psd(const AttenuationChain& chain, double omega_ghz) {
  double s = 0.0;
  for (const AttenuationStage& st : chain.stages) {
    s += st.weight * johnson_noise_psd(omega_ghz, st.temperature_k, chain.resistance_ohm);
  }
  return s;
}

EffectiveTemperature temperature_for_noise(double target_psd, double omega_ghz, double t_max,
                                           double resistance_ohm) {
  if (!(omega_ghz > 0.0)) throw ParameterError("cavity frequency must be positive");
  if (!(target_psd > 0.0)) throw ParameterError("target noise must be positive");
  EffectiveTemperature out;
  const auto residual = [&](double t) { return johnson_noise_psd(omega_ghz, t, resistance_ohm) - target_psd; };
  if (residual(kMinEffectiveTemperature) >= 0.0) {
    out.kelvin = kMinEffectiveTemperature;
    out.clamped_low = true;
  } else {
    if (!(t_max > kMinEffectiveTemperature) || residual(t_max) < 0.0) {
      throw ParameterError("effective temperature lies above the hottest stage; check attenuation weights");
    }
    out.kelvin = bisect_root(residual, kMinEffectiveTemperature, t_max);
  }
  out.relative_residual = std::abs(residual(out.kelvin)) / target_psd;
  return out;
}

EffectiveTemperature effective_temperature(const AttenuationChain& chain, double omega_c_ghz) {
  chain.validate();
  return temperature_for_noise(chain_noise_psd(chain, omega_c_ghz), omega_c_ghz, chain.max_temperature(),
                               chain.resistance_ohm);
}

double thermal_photon_population(double omega_c_ghz, double temperature_k) {
  if (temperature_k < 0.0) throw ParameterError("temperature must be non-negative");
  if (temperature_k == 0.0) return 0.0;
  return 1.0 / std::expm1(omega_c_ghz / units::kelvin_to_ghz(temperature_k));
}

double thermal_dephasing_rate(double kappa_mhz, double chi_mhz, double nbar) {
  if (!(kappa_mhz > 0.0)) throw ParameterError("cavity linewidth must be positive");
  const double kappa = units::mhz_to_cyclic_rate(kappa_mhz);
  const double chi = units::mhz_to_cyclic_rate(chi_mhz);
  const double four_chi2 = 4.0 * chi * chi;
  return kappa * kappa / (kappa * kappa + four_chi2) * four_chi2 / kappa * nbar;
}

FluxNoise FluxNoise::from_micro_flux_quanta(double amplitude_uphi0) {
  const double a = amplitude_uphi0 * 1e-6;
  return FluxNoise{a * a, kDefaultInfraredCutoff};
}

void FluxNoise::validate() const {
  if (!(a_phi >= 0.0)) throw ParameterError("flux-noise amplitude must be non-negative");
  if (!(omega_ir > 0.0)) throw ParameterError("infrared cutoff must be positive");
}

double ramsey_echo_ratio(double omega_ir, double t_s) {
  const double arg = omega_ir * t_s;
  if (!(arg > 0.0) || arg >= 1.0) throw ParameterError("omega_ir * t must lie in (0, 1)");
  return std::sqrt(std::log(1.0 / arg) / std::numbers::ln2);
}

FluxDephasing flux_dephasing_rates(const FluxNoise& noise, double domega_df_ghz, double t_s) {
  noise.validate();
  const double arg = noise.omega_ir * t_s;
  if (!(arg > 0.0) || arg >= 1.0) throw ParameterError("omega_ir * t must lie in (0, 1)");
  const double slope = std::abs(units::ghz_to_rad_per_s(domega_df_ghz));
  FluxDephasing out;
  out.echo = std::sqrt(noise.a_phi * std::numbers::ln2) * slope;
  out.ramsey = std::sqrt(noise.a_phi * std::log(1.0 / arg)) * slope;
  return out;
}

double decay_envelope(double t_s, double t1_s, double gamma_phi, EnvelopeShape shape) {
  const double relax = std::exp(-t_s / (2.0 * t1_s));
  switch (shape) {
    case EnvelopeShape::gaussian: return relax * std::exp(-(gamma_phi * t_s) * (gamma_phi * t_s));
    case EnvelopeShape::exponential: return relax * std::exp(-gamma_phi * t_s);
  }
  return relax;
}

double envelope_decay_time(double t1_s, double gamma_phi, EnvelopeShape shape) {
  if (!(t1_s > 0.0)) throw ParameterError("T1 must be positive");
  if (!(gamma_phi >= 0.0)) throw ParameterError("dephasing rate must be non-negative");
  const double target = std::exp(-1.0);
  const auto f = [&](double t) { return decay_envelope(t, t1_s, gamma_phi, shape) - target; };
  // The pure-T1 envelope reaches 1/e at 2 T1; dephasing only makes it earlier.
  const double hi = 2.0 * t1_s;
  if (f(hi) >= 0.0) return hi;
  return bisect_root(f, 0.0, hi);
}

}  // namespace csfq::decoherence
