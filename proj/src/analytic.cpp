#include "csfq/analytic.hpp"

#include <cmath>

#include "csfq/constants.hpp"

namespace csfq::analytic {

namespace {

// (8 alpha - 1) / (4 (1 - 2 alpha)) E_CS
double quartic_shift(const ValidatedQubit& q) {
  const double a = q.alpha();
  return (8.0 * a - 1.0) / (4.0 * (1.0 - 2.0 * a)) * q.ecs_ghz();
}

// E_CS / (E_J (1 - 2 alpha)), the squared zero-point phase scale.
double charge_ratio(const ValidatedQubit& q) {
  return q.ecs_ghz() / (q.ej_ghz() * (1.0 - 2.0 * q.alpha()));
}

}  // namespace

double validity_ratio(const ValidatedQubit& q) { return 1.0 / charge_ratio(q); }

double plasma_frequency(const ValidatedQubit& q) {
  return std::sqrt(4.0 * q.ecs_ghz() * q.ej_ghz() * (1.0 - 2.0 * q.alpha()));
}

double perturbative_level(const ValidatedQubit& q, int m) {
  const double a = q.alpha();
  const double mm = static_cast<double>(m);
  const double quartic = (8.0 * a - 1.0) / (1.0 - 2.0 * a) * q.ecs_ghz() / 48.0;
  return plasma_frequency(q) * (mm + 0.5) + 2.0 * a * q.ej_ghz() +
         quartic * (6.0 * mm * mm + 6.0 * mm + 3.0);
}

double gap(const ValidatedQubit& q) { return plasma_frequency(q) + quartic_shift(q); }

double anharmonicity(const ValidatedQubit& q) { return quartic_shift(q); }

double epsilon_slope(const ValidatedQubit& q) {
  return 2.0 * std::sqrt(2.0) * constants::pi * q.alpha() * q.ej_ghz() *
         std::pow(charge_ratio(q), 0.25);
}

double epsilon(const ValidatedQubit& q, FluxBias f) { return epsilon_slope(q) * f.offset(); }

double omega01(const ValidatedQubit& q, FluxBias f) {
  const double delta = gap(q);
  const double eps = epsilon(q, f);
  return delta + 2.0 * eps * eps / delta;
}

double domega01_df(const ValidatedQubit& q, FluxBias f) {
  return 4.0 * epsilon(q, f) * epsilon_slope(q) / gap(q);
}

PerturbativeSpectrum perturbative_spectrum(const ValidatedQubit& q) {
  PerturbativeSpectrum s;
  s.gap_ghz = gap(q);
  s.depsilon_df_ghz = epsilon_slope(q);
  s.anharmonicity_ghz = anharmonicity(q);
  s.validity_ratio = validity_ratio(q);
  s.low_validity_warning = s.validity_ratio < kValidityThreshold;
  return s;
}

JunctionMatrixElements junction_matrix_elements(const ValidatedQubit& q) {
  const double r = charge_ratio(q);
  return {std::pow(r, 0.25) / (2.0 * std::sqrt(2.0)), 0.25 * std::sqrt(r)};
}

}  // namespace csfq::analytic
