#include "csfq/cqed.hpp"

#include <cmath>
#include <limits>

#include "csfq/constants.hpp"

namespace csfq::cqed {

namespace {

double detuning_mhz(double omega_ghz, double reference_ghz) {
  const double d = (omega_ghz - reference_ghz) * 1e3;
  if (d == 0.0 || !std::isfinite(d)) throw CqedError("zero qubit-cavity detuning");
  return d;
}

}  // namespace

PartialShift chi_partial(double g_mhz, double omega_ij_ghz, double omega_c0_ghz) {
  const double d = detuning_mhz(omega_ij_ghz, omega_c0_ghz);
  PartialShift out;
  out.chi_mhz = g_mhz * g_mhz / d;
  out.coupling_ratio = std::abs(g_mhz / d);
  out.outside_dispersive = out.coupling_ratio > kDispersiveWarningRatio;
  return out;
}

double total_pull(double chi01_mhz, double chi12_mhz) { return chi01_mhz - 0.5 * chi12_mhz; }

DispersiveSet dispersive_set(double g01_mhz, double g12_mhz, double omega01_ghz, double omega12_ghz,
                             double omega_c0_ghz) {
  DispersiveSet s;
  s.g01_mhz = g01_mhz;
  s.g12_mhz = g12_mhz;
  s.chi01_mhz = chi_partial(g01_mhz, omega01_ghz, omega_c0_ghz).chi_mhz;
  s.chi12_mhz = chi_partial(g12_mhz, omega12_ghz, omega_c0_ghz).chi_mhz;
  s.chi_mhz = total_pull(s.chi01_mhz, s.chi12_mhz);
  return s;
}

DispersiveSet extract_couplings(double omega01_ghz, double omega12_ghz, double omega_c0_ghz,
                                double omega_c_ghz, double chi_mhz) {
  DispersiveSet s;
  s.chi01_mhz = (omega_c0_ghz - omega_c_ghz) * 1e3;
  s.chi12_mhz = 2.0 * (s.chi01_mhz - chi_mhz);
  s.chi_mhz = chi_mhz;
  const double r01 = s.chi01_mhz * detuning_mhz(omega01_ghz, omega_c0_ghz);
  const double r12 = s.chi12_mhz * detuning_mhz(omega12_ghz, omega_c0_ghz);
  if (r01 < 0.0 || r12 < 0.0) {
    throw CqedError("inconsistent dispersive inputs: negative coupling radicand");
  }
  s.g01_mhz = std::sqrt(r01);
  s.g12_mhz = std::sqrt(r12);
  return s;
}

double purcell_t1(double kappa_mhz, double g01_mhz, double omega01_ghz, double omega_c_ghz) {
  if (!(kappa_mhz > 0.0)) throw CqedError("cavity linewidth must be positive");
  const double d = detuning_mhz(omega01_ghz, omega_c_ghz);
  if (g01_mhz == 0.0) return std::numeric_limits<double>::infinity();
  const double ratio = g01_mhz / d;
  return 1.0 / (kappa_mhz * 1e6 * ratio * ratio);
}

}  // namespace csfq::cqed
