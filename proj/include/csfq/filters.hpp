#pragma once

// Filter functions of Ramsey, Hahn-echo and CPMG sequences:
//
//   g_N(w, tau) = |1 + (-1)^{N+1} e^{i w tau}
//                  + 2 sum_j (-1)^j e^{i w delta_j tau} cos(w tau_pi / 2)|^2 / (w tau)^2
//
// N = 0 (empty sum) is the Ramsey free-induction filter 4 sin^2(w tau/2)/(w tau)^2.

#include <utility>
#include <vector>

namespace csfq::filters {

class FilterSpec {
 public:
  /// Throws ParameterError unless tau > 0, tau_pi >= 0, N tau_pi < tau and
  /// the positions are strictly increasing inside (0, 1).
  FilterSpec(double tau_s, double tau_pi_s, std::vector<double> positions);

  static FilterSpec ramsey(double tau_s);
  static FilterSpec cpmg(int pulses, double tau_s, double tau_pi_s = 0.0);
  static FilterSpec hahn_echo(double tau_s, double tau_pi_s = 0.0) { return cpmg(1, tau_s, tau_pi_s); }

  int pulses() const { return static_cast<int>(positions_.size()); }
  double tau() const { return tau_; }
  double tau_pi() const { return tau_pi_; }
  const std::vector<double>& positions() const { return positions_; }

 private:
  double tau_;
  double tau_pi_;
  std::vector<double> positions_;
};

/// delta_j = (2j - 1) / (2N), j = 1..N. Throws ParameterError for N < 1.
std::vector<double> cpmg_positions(int pulses);

/// g_N at angular frequency omega (rad/s). omega = 0 returns the analytic
/// limit: 1 for Ramsey, 0 for sequences with pi pulses.
double filter_function(const FilterSpec& spec, double omega);

/// g_N tabulated on a grid of positive angular frequencies.
std::vector<std::pair<double, double>> filter_curve(const FilterSpec& spec, const std::vector<double>& omegas);

}  // namespace csfq::filters
