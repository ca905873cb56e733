#include "csfq/filters.hpp"

#include <cmath>
#include <complex>

#include "csfq/params.hpp"

namespace csfq::filters {

FilterSpec::FilterSpec(double tau_s, double tau_pi_s, std::vector<double> positions)
    : tau_(tau_s), tau_pi_(tau_pi_s), positions_(std::move(positions)) {
  if (!(tau_ > 0.0) || !std::isfinite(tau_)) throw ParameterError("sequence length must be positive");
  if (!(tau_pi_ >= 0.0)) throw ParameterError("pi-pulse duration must be non-negative");
  if (!(static_cast<double>(positions_.size()) * tau_pi_ < tau_)) {
    throw ParameterError("pi pulses do not fit in the sequence");
  }
  double prev = 0.0;
  for (double d : positions_) {
    if (!(d > prev) || !(d < 1.0)) throw ParameterError("pulse positions must increase strictly inside (0, 1)");
    prev = d;
  }
}

FilterSpec FilterSpec::ramsey(double tau_s) { return FilterSpec(tau_s, 0.0, {}); }

FilterSpec FilterSpec::cpmg(int pulses, double tau_s, double tau_pi_s) {
  return FilterSpec(tau_s, tau_pi_s, cpmg_positions(pulses));
}

std::vector<double> cpmg_positions(int pulses) {
  if (pulses < 1) throw ParameterError("CPMG needs at least one pi pulse; use FilterSpec::ramsey");
  std::vector<double> out(static_cast<std::size_t>(pulses));
  for (int j = 1; j <= pulses; ++j) out[static_cast<std::size_t>(j - 1)] = (2.0 * j - 1.0) / (2.0 * pulses);
  return out;
}

double filter_function(const FilterSpec& spec, double omega) {
  const int n = spec.pulses();
  if (omega == 0.0) return n == 0 ? 1.0 : 0.0;
  const double wt = omega * spec.tau();
  const double edge = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{N+1}
  std::complex<double> sum = 1.0 + edge * std::polar(1.0, wt);
  const double pulse = 2.0 * std::cos(0.5 * omega * spec.tau_pi());
  for (int j = 1; j <= n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += sign * pulse * std::polar(1.0, wt * spec.positions()[static_cast<std::size_t>(j - 1)]);
  }
  return std::norm(sum) / (wt * wt);
}

std::vector<std::pair<double, double>> filter_curve(const FilterSpec& spec, const std::vector<double>& omegas) {
  std::vector<std::pair<double, double>> out;
  out.reserve(omegas.size());
  for (double w : omegas) {
    if (!(w > 0.0)) throw ParameterError("filter curve frequencies must be positive");
    out.emplace_back(w, filter_function(spec, w));
  }
  return out;
}

}  // namespace csfq::filters
