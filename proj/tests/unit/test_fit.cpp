#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "common.hpp"
#include "csfq/analytic.hpp"
#include "csfq/decoherence.hpp"
#include "csfq/fit.hpp"

using namespace csfq;
using namespace csfq::fit;
using doctest::Approx;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

DataSeries spectrum_data(const ValidatedQubit& q, double noise_ghz, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, noise_ghz);
  DataSeries d;
  for (double f : linspace(0.49, 0.51, 21)) {
    d.x.push_back(f);
    d.y.push_back(analytic::omega01(q, {f}) + (noise_ghz > 0 ? n(rng) : 0.0));
  }
  return d;
}

DataSeries t1_data(const ValidatedQubit& q, double x_qp, double rel_noise, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, rel_noise);
  decoherence::QuasiparticleEnv env;
  env.x_qp = x_qp;
  const auto m = analytic::junction_matrix_elements(q);
  DataSeries d;
  for (double t : {0.01, 0.05, 0.1, 0.15, 0.2}) {
    d.x.push_back(t);
    const double t1 = 1.0 / decoherence::qp_relaxation_rate(q, 4.68, env, t, m);
    d.y.push_back(t1 * (1.0 + (rel_noise > 0 ? n(rng) : 0.0)));
  }
  return d;
}

DataSeries envelope_data(double t1, double gamma, decoherence::EnvelopeShape shape, double amp, double offset) {
  DataSeries d;
  for (double t : linspace(0.0, 300e-6, 61)) {
    d.x.push_back(t);
    d.y.push_back(amp * decoherence::decay_envelope(t, t1, gamma, shape) + offset);
  }
  return d;
}

DataSeries flux_noise_data(const ValidatedQubit& q, double amp_uphi0, double rel_noise, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, rel_noise);
  const auto noise = decoherence::FluxNoise::from_micro_flux_quanta(amp_uphi0);
  DataSeries d;
  for (double f : linspace(0.49, 0.51, 41)) {
    d.x.push_back(f);
    const double g = decoherence::flux_dephasing_rates(noise, analytic::domega01_df(q, {f}), 1e-6).echo;
    d.y.push_back(g * (1.0 + (rel_noise > 0 ? n(rng) : 0.0)));
  }
  return d;
}

}  // namespace

TEST_SUITE("fit") {
  TEST_CASE("data series validation") {
    DataSeries d{{0.1, 0.2}, {1.0}};
    CHECK_THROWS_AS(d.validate(1), ParameterError);
    d.y.push_back(2.0);
    CHECK_NOTHROW(d.validate(2));
    CHECK_THROWS_AS(d.validate(3), ParameterError);
    d.sigma = std::vector<double>{1.0, 0.0};
    CHECK_THROWS_AS(d.validate(2), ParameterError);
    const DataSeries dup{{0.3, 0.3}, {1.0, 2.0}};
    CHECK_THROWS_AS(dup.sorted(), ParameterError);
    CHECK(dup.sorted_allow_repeats().x.size() == 2);
    const DataSeries unsorted{{0.3, 0.1}, {1.0, 2.0}};
    CHECK(unsorted.sorted().y == std::vector<double>{2.0, 1.0});
  }

  TEST_CASE("spectrum round trip") {
    const ValidatedQubit truth = test::perturbative_set();
    SpectrumFitOptions opts;
    opts.anharmonicity_ghz = analytic::anharmonicity(truth);
    opts.anharmonicity_sigma_ghz = 1e-3;
    const FitResult r = fit_spectrum(spectrum_data(truth, 0.0, 0), {0.38, 95.0, 3.2, 70.0}, opts);
    CHECK(r.converged);
    CHECK(test::rel_err(r.parameters.at("alpha"), 0.41) < 1e-3);
    CHECK(test::rel_err(r.parameters.at("cs_ff"), 78.0) < 1e-3);
    CHECK(test::rel_err(r.parameters.at("ej_ghz"), 85.0) < 1e-3);
    CHECK_FALSE(r.has_flag("alpha_fixed"));
    for (std::size_t i = 1; i < r.objective_history.size(); ++i)
      CHECK(r.objective_history[i] <= r.objective_history[i - 1]);
  }

  TEST_CASE("spectrum with 1 MHz noise") {
    const ValidatedQubit truth = test::perturbative_set();
    SpectrumFitOptions opts;
    opts.anharmonicity_ghz = analytic::anharmonicity(truth);
    opts.anharmonicity_sigma_ghz = 1e-3;
    const FitResult r = fit_spectrum(spectrum_data(truth, 1e-3, 42), {0.38, 95.0, 3.2, 70.0}, opts);
    CHECK(r.converged);
    CHECK(test::rel_err(r.parameters.at("alpha"), 0.41) < 0.02);
    CHECK(test::rel_err(r.parameters.at("cs_ff"), 78.0) < 0.02);
    CHECK(test::rel_err(r.parameters.at("ej_ghz"), 85.0) < 0.02);
  }

  TEST_CASE("spectrum fit flags and errors") {
    const ValidatedQubit truth = test::perturbative_set();
    const FitResult fixed = fit_spectrum(spectrum_data(truth, 0.0, 0), {0.41, 95.0, 3.2, 70.0});
    CHECK(fixed.has_flag("alpha_fixed"));
    CHECK(fixed.parameters.at("alpha") == 0.41);

    DataSeries one_side;
    for (double f : linspace(0.5, 0.51, 8)) {
      one_side.x.push_back(f);
      one_side.y.push_back(analytic::omega01(truth, {f}));
    }
    CHECK(fit_spectrum(one_side, {0.41, 95.0, 3.2, 70.0}).has_flag("one_sided"));

    const DataSeries flat{{0.5, 0.5, 0.5, 0.5}, {4.4, 4.4, 4.4, 4.4}};
    CHECK_THROWS_AS(fit_spectrum(flat, {0.41, 85.0, 3.2, 78.0}), RankDeficientError);
    CHECK_THROWS_AS(fit_spectrum(DataSeries{{0.49, 0.5, 0.51}, {1, 2, 3}}, {0.41, 85.0, 3.2, 78.0}), ParameterError);
  }

  TEST_CASE("x_qp round trip") {
    const ValidatedQubit q = test::perturbative_set();
    const auto m = analytic::junction_matrix_elements(q);
    const FitResult r = fit_xqp(t1_data(q, 6e-8, 0.0, 0), q, 4.68, 200.0, m);
    CHECK(r.parameters.at("x_qp") == Approx(6e-8).epsilon(5e-3));
    const FitResult noisy = fit_xqp(t1_data(q, 6e-8, 0.02, 7), q, 4.68, 200.0, m);
    CHECK(noisy.parameters.at("x_qp") == Approx(6e-8).epsilon(0.05));
    const FitResult zero = fit_xqp(t1_data(q, 0.0, 0.0, 0), q, 4.68, 200.0, m);
    CHECK(zero.parameters.at("x_qp") < 1e-12);
  }

  TEST_CASE("x_qp from T1 values matching the device") {
    const ValidatedQubit q = test::perturbative_set();
    const auto m = analytic::junction_matrix_elements(q);
    const DataSeries d{{0.01, 0.15}, {83e-6, 26e-6}};
    const FitResult r = fit_xqp(d, q, 4.68, 200.0, m);
    CHECK(r.derived.at("n_qp_per_um3") <= 0.6);
    CHECK(r.derived.at("n_qp_per_um3") > 0.5);
  }

  TEST_CASE("x_qp clipping and sensitivity flags") {
    const ValidatedQubit q = test::perturbative_set();
    const auto m = analytic::junction_matrix_elements(q);
    DataSeries hot = t1_data(q, 0.0, 0.0, 0);
    for (double& t1 : hot.y) t1 *= 1.5;
    CHECK(fit_xqp(hot, q, 4.68, 200.0, m).has_flag("clipped_at_zero"));
    const DataSeries high{{0.25, 0.3, 0.35}, {1e-7, 2e-8, 5e-9}};
    CHECK(fit_xqp(high, q, 4.68, 200.0, m).has_flag("wide_uncertainty"));
  }

  TEST_CASE("envelope round trip") {
    using decoherence::EnvelopeShape;
    const DataSeries g = envelope_data(90e-6, 1.25e4, EnvelopeShape::gaussian, 0.8, 0.1);
    const FitResult r = fit_envelope(g, 90e-6, EnvelopeShape::gaussian);
    CHECK(r.converged);
    CHECK(r.parameters.at("gamma_phi_per_s") == Approx(1.25e4).epsilon(5e-3));
    CHECK(r.parameters.at("amplitude") == Approx(0.8).epsilon(5e-3));
    const FitResult e = fit_envelope(g, 90e-6, EnvelopeShape::exponential);
    CHECK(e.residual_norm > 10 * r.residual_norm);

    const DataSeries x = envelope_data(90e-6, 2e4, EnvelopeShape::exponential, 1.0, 0.0);
    CHECK(fit_envelope(x, 90e-6, EnvelopeShape::exponential).parameters.at("gamma_phi_per_s") ==
          Approx(2e4).epsilon(5e-3));
  }

  TEST_CASE("envelope without dephasing") {
    using decoherence::EnvelopeShape;
    const DataSeries d = envelope_data(90e-6, 0.0, EnvelopeShape::gaussian, 1.0, 0.0);
    const FitResult g = fit_envelope(d, 90e-6, EnvelopeShape::gaussian);
    const FitResult e = fit_envelope(d, 90e-6, EnvelopeShape::exponential);
    CHECK(std::abs(g.parameters.at("gamma_phi_per_s")) < 10.0);
    CHECK(std::abs(e.parameters.at("gamma_phi_per_s")) < 10.0);
  }

  TEST_CASE("envelope negative amplitude is flagged") {
    using decoherence::EnvelopeShape;
    const DataSeries d = envelope_data(90e-6, 1e4, EnvelopeShape::gaussian, -0.5, 1.0);
    CHECK(fit_envelope(d, 90e-6, EnvelopeShape::gaussian).has_flag("negative_amplitude"));
  }

  TEST_CASE("flux noise round trip") {
    const ValidatedQubit q = test::perturbative_set();
    const FitResult r = fit_flux_noise(flux_noise_data(q, 1.8, 0.0, 0), q);
    CHECK(r.parameters.at("a_phi") == Approx(1.8e-6 * 1.8e-6).epsilon(5e-3));
    CHECK(r.derived.at("amplitude_uphi0") == Approx(1.8).epsilon(5e-3));
    const FitResult noisy = fit_flux_noise(flux_noise_data(q, 1.8, 0.01, 3), q);
    CHECK(noisy.parameters.at("a_phi") == Approx(1.8e-6 * 1.8e-6).epsilon(0.01));
  }

  TEST_CASE("flux noise edge cases") {
    const ValidatedQubit q = test::perturbative_set();
    DataSeries zero = flux_noise_data(q, 1.8, 0.0, 0);
    for (double& y : zero.y) y = 0.0;
    CHECK(fit_flux_noise(zero, q).parameters.at("a_phi") == Approx(0.0).scale(1e-30));
    const DataSeries few{{0.499, 0.5, 0.501, 0.51, 0.49}, {1, 0, 1, 5, 5}};
    CHECK_THROWS_AS(fit_flux_noise(few, q), ParameterError);
  }

  TEST_CASE("flux noise slope is invariant under points on the line") {
    const ValidatedQubit q = test::perturbative_set();
    DataSeries d = flux_noise_data(q, 1.8, 0.02, 11);
    const FitResult base = fit_flux_noise(d, q);
    const double slope = base.parameters.at("slope");
    const double c = base.parameters.at("intercept_per_s");
    for (double f : {0.4913, 0.5077, 0.5091}) {
      d.x.push_back(f);
      d.y.push_back(c + slope * std::abs(2e9 * std::numbers::pi * analytic::domega01_df(q, {f})));
    }
    CHECK(fit_flux_noise(d, q).parameters.at("slope") == Approx(slope).epsilon(1e-9));
  }

  TEST_CASE("T1 exponential") {
    DataSeries d;
    for (double t : linspace(0.0, 400e-6, 41)) {
      d.x.push_back(t);
      d.y.push_back(0.9 * std::exp(-t / 90e-6) + 0.05);
    }
    const FitResult r = fit_t1_exponential(d);
    CHECK(r.converged);
    CHECK(r.parameters.at("t1_s") == Approx(90e-6).epsilon(1e-3));
    DataSeries shifted = d;
    for (double& y : shifted.y) y += 0.3;
    CHECK(fit_t1_exponential(shifted).parameters.at("t1_s") == Approx(r.parameters.at("t1_s")).epsilon(1e-6));

    DataSeries flat = d;
    for (double& y : flat.y) y = 0.5;
    const FitResult c = fit_t1_exponential(flat);
    CHECK(c.has_flag("constant_data"));
    CHECK_FALSE(c.converged);
  }
}
