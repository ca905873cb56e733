#include "csfq/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "csfq/constants.hpp"

namespace csfq::fit {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double sigmoid(double p) { return 1.0 / (1.0 + std::exp(-p)); }

double sigma_at(const DataSeries& d, std::size_t i) { return d.sigma ? (*d.sigma)[i] : 1.0; }

void fill_from_lm(FitResult& out, const LmResult& lm) {
  out.residuals.assign(lm.residuals.data(), lm.residuals.data() + lm.residuals.size());
  out.residual_norm = lm.residuals.norm();
  out.gradient_norm = lm.gradient_norm;
  out.iterations = lm.iterations;
  out.converged = lm.converged;
  out.objective_history = lm.cost_history;
  if (!lm.converged) out.flags.push_back("not_converged: " + lm.stop_reason);
}

Eigen::VectorXd standard_errors(const LmResult& lm) {
  const Eigen::MatrixXd cov = lm.covariance();
  return cov.diagonal().cwiseMax(0.0).cwiseSqrt();
}

// Index of the first sample whose distance from `baseline` falls below
// |y0 - baseline| / e, or npos.
std::size_t first_e_fold(const DataSeries& d, double baseline) {
  const double start = std::abs(d.y.front() - baseline);
  for (std::size_t i = 1; i < d.y.size(); ++i) {
    if (std::abs(d.y[i] - baseline) <= start / std::numbers::e) return i;
  }
  return std::string::npos;
}

}  // namespace

void DataSeries::validate(std::size_t min_points) const {
  if (x.size() != y.size()) throw ParameterError("x and y have different lengths");
  if (sigma && sigma->size() != y.size()) throw ParameterError("uncertainties and y have different lengths");
  if (x.size() < min_points) {
    throw ParameterError("need at least " + std::to_string(min_points) + " data points, got " +
                         std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) throw ParameterError("data contain non-finite values");
    if (sigma && !((*sigma)[i] > 0.0)) throw ParameterError("uncertainties must be positive");
  }
}

DataSeries DataSeries::sorted_allow_repeats() const {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  DataSeries out;
  out.x_label = x_label;
  out.y_label = y_label;
  if (sigma) out.sigma.emplace();
  for (std::size_t i : order) {
    out.x.push_back(x[i]);
    out.y.push_back(y[i]);
    if (sigma) out.sigma->push_back((*sigma)[i]);
  }
  return out;
}

DataSeries DataSeries::sorted() const {
  DataSeries out = sorted_allow_repeats();
  for (std::size_t i = 1; i < out.x.size(); ++i) {
    if (!(out.x[i] > out.x[i - 1])) throw ParameterError("x values must be distinct");
  }
  return out;
}

bool FitResult::has_flag(const std::string& flag) const {
  return std::any_of(flags.begin(), flags.end(), [&](const std::string& f) { return f.rfind(flag, 0) == 0; });
}

// ---------------------------------------------------------------------------

FitResult fit_spectrum(const DataSeries& data, const QubitParams& init, const SpectrumFitOptions& options) {
  data.validate(4);
  const DataSeries d = data.sorted_allow_repeats();
  const ValidatedQubit q0 = validate_params(init);
  const bool fit_alpha = options.anharmonicity_ghz.has_value();
  if (fit_alpha && !(options.anharmonicity_sigma_ghz > 0.0)) {
    throw ParameterError("anharmonicity uncertainty must be positive");
  }

  const auto unpack = [&](std::span<const double> p) {
    QubitParams qp = init;
    std::size_t k = 0;
    if (fit_alpha) qp.alpha = 0.5 * sigmoid(p[k++]);
    qp.cs_ff = std::exp(p[k++]);
    qp.ej_ghz = std::exp(p[k]);
    return validate_params(qp);
  };

  const std::size_t n = d.x.size();
  const Eigen::Index m = static_cast<Eigen::Index>(n + (fit_alpha ? 1 : 0));
  const ResidualFunction residuals = [&](std::span<const double> p, std::span<double> r) {
    const ValidatedQubit q = unpack(p);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = (analytic::omega01(q, FluxBias{d.x[i]}) - d.y[i]) / sigma_at(d, i);
    }
    if (fit_alpha) r[n] = (analytic::anharmonicity(q) - *options.anharmonicity_ghz) / options.anharmonicity_sigma_ghz;
  };

  Eigen::VectorXd x0(fit_alpha ? 3 : 2);
  Eigen::Index k = 0;
  if (fit_alpha) x0(k++) = std::log(2.0 * q0.alpha() / (1.0 - 2.0 * q0.alpha()));
  x0(k++) = std::log(q0.cs_ff());
  x0(k) = std::log(q0.ej_ghz());

  const LmResult lm = levenberg_marquardt(residuals, x0, m, options.lm);
  const Eigen::VectorXd se = standard_errors(lm);
  const ValidatedQubit q = unpack(std::span<const double>(lm.params.data(), static_cast<std::size_t>(lm.params.size())));

  FitResult out;
  fill_from_lm(out, lm);
  k = 0;
  if (fit_alpha) {
    const double s = sigmoid(lm.params(0));
    out.uncertainties["alpha"] = 0.5 * s * (1.0 - s) * se(k++);
  } else {
    out.flags.push_back("alpha_fixed: no anharmonicity supplied; omega01(f) constrains only two combinations");
  }
  out.parameters["alpha"] = q.alpha();
  out.parameters["cs_ff"] = q.cs_ff();
  out.uncertainties["cs_ff"] = q.cs_ff() * se(k++);
  out.parameters["ej_ghz"] = q.ej_ghz();
  out.uncertainties["ej_ghz"] = q.ej_ghz() * se(k);

  const analytic::PerturbativeSpectrum ps = analytic::perturbative_spectrum(q);
  out.derived["ecs_ghz"] = q.ecs_ghz();
  out.derived["gap_ghz"] = ps.gap_ghz;
  out.derived["anharmonicity_ghz"] = ps.anharmonicity_ghz;
  out.derived["depsilon_df_ghz"] = ps.depsilon_df_ghz;
  out.derived["validity_ratio"] = ps.validity_ratio;
  if (ps.low_validity_warning) out.flags.push_back("low_validity_ratio");

  const bool below = std::any_of(d.x.begin(), d.x.end(), [](double f) { return f < FluxBias::optimal; });
  const bool above = std::any_of(d.x.begin(), d.x.end(), [](double f) { return f > FluxBias::optimal; });
  if (!(below && above)) out.flags.push_back("one_sided: data do not span both sides of f = 0.5");
  return out;
}

// ---------------------------------------------------------------------------

FitResult fit_xqp(const DataSeries& data, const ValidatedQubit& q, double omega01_ghz, double delta0_uev,
                  const analytic::JunctionMatrixElements& m, double n_cp_per_um3) {
  data.validate(2);
  const DataSeries d = data.sorted();
  decoherence::QuasiparticleEnv unit{1.0, delta0_uev, n_cp_per_um3};

  // Gamma_i(x) = a_i x + b_i; residuals are relative to the measured rate.
  const std::size_t n = d.x.size();
  std::vector<double> a(n), b(n), g(n);
  double saa = 0.0;
  double sab = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(d.y[i] > 0.0)) throw ParameterError("T1 values must be positive");
    const decoherence::QpRateTerms t = decoherence::qp_rate_terms(q, omega01_ghz, unit, d.x[i], m);
    g[i] = 1.0 / d.y[i];
    a[i] = t.nonequilibrium / g[i];
    b[i] = (t.equilibrium_down + t.equilibrium_up) / g[i];
    saa += a[i] * a[i];
    sab += a[i] * (1.0 - b[i]);
  }

  FitResult out;
  double x = sab / saa;
  if (x < 0.0) {
    x = 0.0;
    out.flags.push_back("clipped_at_zero");
  }
  double ss = 0.0;
  double sensitivity = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = a[i] * x + b[i] - 1.0;
    out.residuals.push_back(r);
    ss += r * r;
    sensitivity = std::max(sensitivity, a[i] * x / (a[i] * x + b[i]));
  }
  const double sigma_x = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1) / saa) : kNan;

  out.parameters["x_qp"] = x;
  out.uncertainties["x_qp"] = sigma_x;
  unit.x_qp = x;
  out.derived["n_qp_per_um3"] = decoherence::nqp_from_xqp(unit);
  out.residual_norm = std::sqrt(ss);
  out.gradient_norm = std::abs(saa * x - sab);
  out.iterations = 1;
  out.converged = true;
  out.objective_history = {0.5 * ss};
  if (sensitivity < 0.05 || sigma_x > 0.5 * x) {
    out.flags.push_back("wide_uncertainty: quasiparticle term is a small part of every rate");
  }
  return out;
}

// ---------------------------------------------------------------------------

FitResult fit_envelope(const DataSeries& data, double t1_s, decoherence::EnvelopeShape shape,
                       const LmOptions& options) {
  using decoherence::EnvelopeShape;
  data.validate(6);
  if (!(t1_s > 0.0)) throw ParameterError("T1 must be positive");
  const DataSeries d = data.sorted();
  const double t_scale = std::max(std::abs(d.x.front()), std::abs(d.x.back()));
  if (!(t_scale > 0.0)) throw ParameterError("time axis has zero extent");

  // p = (v, a, c): Gamma = |v| / t_scale for the Gaussian, v^2 / t_scale for
  // the exponential, so Gamma >= 0 in both.
  const auto gamma_of = [&](double v) {
    return shape == EnvelopeShape::gaussian ? std::abs(v) / t_scale : v * v / t_scale;
  };
  const std::size_t n = d.x.size();
  const ResidualFunction residuals = [&](std::span<const double> p, std::span<double> r) {
    const double gamma = gamma_of(p[0]);
    for (std::size_t i = 0; i < n; ++i) {
      const double model = p[1] * decoherence::decay_envelope(d.x[i], t1_s, gamma, shape) + p[2];
      r[i] = (model - d.y[i]) / sigma_at(d, i);
    }
  };

  const double c0 = d.y.back();
  const double t0 = d.x.front();
  const std::size_t ie = first_e_fold(d, c0);
  double gamma0 = 0.5 / t_scale;
  if (ie != std::string::npos) {
    const double te = d.x[ie] - t0;
    const double left = std::max(1.0 - te / (2.0 * t1_s), 0.01);
    gamma0 = shape == EnvelopeShape::gaussian ? std::sqrt(left) / te : left / te;
  }
  const double env0 = decoherence::decay_envelope(t0, t1_s, gamma0, shape);
  Eigen::VectorXd x0(3);
  x0 << (shape == EnvelopeShape::gaussian ? gamma0 * t_scale : std::sqrt(gamma0 * t_scale)),
      (d.y.front() - c0) / env0, c0;

  const LmResult lm = levenberg_marquardt(residuals, x0, static_cast<Eigen::Index>(n), options);
  const Eigen::VectorXd se = standard_errors(lm);

  FitResult out;
  fill_from_lm(out, lm);
  const double v = lm.params(0);
  out.parameters["gamma_phi_per_s"] = gamma_of(v);
  out.uncertainties["gamma_phi_per_s"] =
      (shape == EnvelopeShape::gaussian ? 1.0 : 2.0 * std::abs(v)) * se(0) / t_scale;
  out.parameters["amplitude"] = lm.params(1);
  out.uncertainties["amplitude"] = se(1);
  out.parameters["offset"] = lm.params(2);
  out.uncertainties["offset"] = se(2);
  out.derived["t1_s"] = t1_s;
  if (lm.params(1) < 0.0) out.flags.push_back("negative_amplitude");
  return out;
}

// ---------------------------------------------------------------------------

FitResult fit_flux_noise(const DataSeries& data, const ValidatedQubit& q, double exclusion_window) {
  if (!(exclusion_window >= 0.0)) throw ParameterError("exclusion window must be non-negative");
  data.validate(1);
  const DataSeries all = data.sorted();

  std::vector<double> xs, ys, ws;
  for (std::size_t i = 0; i < all.x.size(); ++i) {
    if (std::abs(all.x[i] - FluxBias::optimal) <= exclusion_window) continue;
    xs.push_back(std::abs(units::ghz_to_rad_per_s(analytic::domega01_df(q, FluxBias{all.x[i]}))));
    ys.push_back(all.y[i]);
    const double s = sigma_at(all, i);
    ws.push_back(1.0 / (s * s));
  }
  const std::size_t n = xs.size();
  if (n < 3) {
    throw ParameterError("fewer than 3 points outside the exclusion window |f - 0.5| <= " +
                         std::to_string(exclusion_window));
  }

  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sw += ws[i];
    sx += ws[i] * xs[i];
    sy += ws[i] * ys[i];
  }
  const double xm = sx / sw;
  const double ym = sy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += ws[i] * (xs[i] - xm) * (xs[i] - xm);
    sxy += ws[i] * (xs[i] - xm) * (ys[i] - ym);
  }
  if (!(sxx > 1e-24 * sw * xm * xm)) {
    throw RankDeficientError("all points share one |d omega01/df|; slope and intercept are not separable");
  }
  const double slope = sxy / sxx;
  const double intercept = ym - slope * xm;

  FitResult out;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = slope * xs[i] + intercept - ys[i];
    out.residuals.push_back(r);
    ss += ws[i] * r * r;
  }
  const double s2 = ss / static_cast<double>(n - 2 > 0 ? n - 2 : 1);
  const double se_slope = std::sqrt(s2 / sxx);
  const double se_intercept = std::sqrt(s2 * (1.0 / sw + xm * xm / sxx));

  double a_phi = slope * slope / std::numbers::ln2;
  double se_a = 2.0 * std::abs(slope) * se_slope / std::numbers::ln2;
  if (slope < 0.0) {
    a_phi = 0.0;
    out.flags.push_back("negative_slope: rates fall with |d omega01/df|; A_Phi set to 0");
  }
  out.parameters["a_phi"] = a_phi;
  out.uncertainties["a_phi"] = se_a;
  out.parameters["slope"] = slope;
  out.uncertainties["slope"] = se_slope;
  out.parameters["intercept_per_s"] = intercept;
  out.uncertainties["intercept_per_s"] = se_intercept;
  out.derived["amplitude_uphi0"] = std::sqrt(a_phi) * 1e6;
  out.derived["points_used"] = static_cast<double>(n);
  out.residual_norm = std::sqrt(ss);
  out.iterations = 1;
  out.converged = true;
  out.objective_history = {0.5 * ss};
  return out;
}

// ---------------------------------------------------------------------------

FitResult fit_t1_exponential(const DataSeries& data, const LmOptions& options) {
  data.validate(4);
  const DataSeries d = data.sorted();
  const std::size_t n = d.x.size();
  const double t0 = d.x.front();
  const double span = d.x.back() - t0;

  FitResult out;
  const auto [lo, hi] = std::minmax_element(d.y.begin(), d.y.end());
  const double mean = std::accumulate(d.y.begin(), d.y.end(), 0.0) / static_cast<double>(n);
  if (!(*hi - *lo > 1e-12 * std::max(1.0, std::abs(mean)))) {
    out.parameters = {{"t1_s", kNan}, {"amplitude", 0.0}, {"offset", mean}};
    out.residuals.assign(n, 0.0);
    out.flags.push_back("constant_data");
    return out;
  }

  // p = (log(T1 / span), a, c) with the decay referenced to t0.
  const ResidualFunction residuals = [&](std::span<const double> p, std::span<double> r) {
    const double t1 = span * std::exp(p[0]);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = (p[1] * std::exp(-(d.x[i] - t0) / t1) + p[2] - d.y[i]) / sigma_at(d, i);
    }
  };

  const double c0 = d.y.back();
  const std::size_t ie = first_e_fold(d, c0);
  const double t1_init = ie != std::string::npos ? d.x[ie] - t0 : span;
  Eigen::VectorXd x0(3);
  x0 << std::log(t1_init / span), d.y.front() - c0, c0;

  const LmResult lm = levenberg_marquardt(residuals, x0, static_cast<Eigen::Index>(n), options);
  const Eigen::VectorXd se = standard_errors(lm);
  fill_from_lm(out, lm);

  const double t1 = span * std::exp(lm.params(0));
  const double amplitude = lm.params(1) * std::exp(t0 / t1);
  out.parameters["t1_s"] = t1;
  out.uncertainties["t1_s"] = t1 * se(0);
  out.parameters["amplitude"] = amplitude;
  out.uncertainties["amplitude"] = std::exp(t0 / t1) * se(1);
  out.parameters["offset"] = lm.params(2);
  out.uncertainties["offset"] = se(2);
  if (!(t1 < 10.0 * span)) {
    out.converged = false;
    out.flags.push_back("non_decaying: fitted T1 exceeds ten record lengths");
  }
  return out;
}

}  // namespace csfq::fit
