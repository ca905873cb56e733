#pragma once

// Inverse problems on top of the forward models.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csfq/analytic.hpp"
#include "csfq/decoherence.hpp"
#include "csfq/least_squares.hpp"
#include "csfq/params.hpp"

namespace csfq::fit {

/// Paired samples with optional one-sigma uncertainties on y.
struct DataSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::optional<std::vector<double>> sigma;
  std::string x_label;
  std::string y_label;

  /// Throws ParameterError unless lengths agree, there are at least
  /// `min_points` samples, values are finite and sigmas are positive.
  void validate(std::size_t min_points) const;

  /// Copy sorted by x; throws ParameterError on duplicate x.
  DataSeries sorted() const;

  /// Copy sorted by x that keeps repeated x values.
  DataSeries sorted_allow_repeats() const;
};

struct FitResult {
  std::map<std::string, double> parameters;
  std::map<std::string, double> uncertainties;
  /// Quantities implied by the fitted parameters (not free in the fit).
  std::map<std::string, double> derived;
  std::vector<double> residuals;
  double residual_norm = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_history;
  std::vector<std::string> flags;

  bool has_flag(const std::string& flag) const;
};

// ---------------------------------------------------------------------------

struct SpectrumFitOptions {
  /// Measured anharmonicity, GHz. Without it alpha is held at its initial value.
  std::optional<double> anharmonicity_ghz;
  double anharmonicity_sigma_ghz = 1.0;
  LmOptions lm;
};

/// Fits the perturbative omega01(f) to (f, GHz) samples. Parameters are
/// alpha (logit of 2 alpha), C_S and E_J (log). Throws ParameterError for
/// fewer than 4 points and RankDeficientError when f takes one value only.
FitResult fit_spectrum(const DataSeries& data, const QubitParams& init, const SpectrumFitOptions& options = {});

// ---------------------------------------------------------------------------

/// Fits x_qp >= 0 to (T K, T1 s) data by least squares on relative rate
/// residuals. Gamma is affine in x_qp, so the solution is closed form.
FitResult fit_xqp(const DataSeries& data, const ValidatedQubit& q, double omega01_ghz, double delta0_uev,
                  const analytic::JunctionMatrixElements& m,
                  double n_cp_per_um3 = decoherence::kDefaultCooperPairDensity);

// ---------------------------------------------------------------------------

/// Fits y = a * envelope(t; T1, Gamma_phi, shape) + c to (s, signal) data.
FitResult fit_envelope(const DataSeries& data, double t1_s, decoherence::EnvelopeShape shape,
                       const LmOptions& options = {});

// ---------------------------------------------------------------------------

inline constexpr double kDefaultExclusionWindow = 0.002;

/// Linear fit of Gamma_E against |d omega01/df| (rad/s) outside
/// |f - 0.5| <= exclusion_window; A_Phi = slope^2 / ln 2. Throws
/// ParameterError when fewer than 3 points remain.
FitResult fit_flux_noise(const DataSeries& data, const ValidatedQubit& q,
                         double exclusion_window = kDefaultExclusionWindow);

// ---------------------------------------------------------------------------

/// Fits y = a e^{-t/T1} + c. Constant data are flagged and returned
/// unconverged; so are fits whose T1 exceeds ten times the record length.
FitResult fit_t1_exponential(const DataSeries& data, const LmOptions& options = {});

}  // namespace csfq::fit
