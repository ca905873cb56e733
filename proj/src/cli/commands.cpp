#include "csfq/cli/commands.hpp"

#include <cmath>

#include <fmt/format.h>

#include "csfq/analytic.hpp"
#include "csfq/cli/csv.hpp"
#include "csfq/cli/output.hpp"
#include "csfq/cqed.hpp"
#include "csfq/decoherence.hpp"
#include "csfq/filters.hpp"
#include "csfq/lanczos.hpp"
#include "csfq/numeric.hpp"

namespace csfq::cli {

namespace {

using nlohmann::json;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(); }

json json_map(const std::map<std::string, double>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = finite_or_null(v);
  return out;
}

OutputSet open_outputs(const RunContext& ctx) {
  return OutputSet(ctx.out_dir, parse_table_format(ctx.config.text("output.format")));
}

void finish(OutputSet& out, const RunContext& ctx, const std::string& command,
            const std::vector<std::filesystem::path>& data = {}) {
  json cfg = json::object();
  for (const auto& [k, v] : ctx.config.effective()) cfg[k] = v;
  out.write_manifest(command, ctx.config.canonical(), cfg, data);
}

// Measured transition frequencies when configured, perturbative otherwise.
std::pair<double, double> qubit_frequencies(const RunConfig& c, const ValidatedQubit& q) {
  const analytic::PerturbativeSpectrum ps = analytic::perturbative_spectrum(q);
  const double w01 = c.optional_number("cqed.omega01_ghz").value_or(ps.gap_ghz);
  const double w12 = c.optional_number("cqed.omega12_ghz").value_or(ps.gap_ghz + ps.anharmonicity_ghz);
  return {w01, w12};
}

}  // namespace

// ---------------------------------------------------------------------------

int cmd_spectrum(const RunContext& ctx) {
  const RunConfig& c = ctx.config;
  const ValidatedQubit q = validate_params(qubit_params(c));
  const std::vector<double> fluxes = flux_sweep(c).values();
  const bool numeric = c.boolean("grid.numeric");
  if (numeric && !q.has_junction_charging_energy()) {
    throw ConfigError("the 2D solve needs qubit.ec_ghz; set it or grid.numeric = false");
  }
  OutputSet out = open_outputs(ctx);

  std::vector<numeric::FluxPoint> points;
  json summary = json::object();
  json flags = json::array();
  if (numeric) {
    const numeric::GridSpec grid = grid_spec(c);
    numeric::SweepOptions opts;
    opts.workers = ctx.workers;
    opts.lanczos = lanczos_options(c);
    points = numeric::sweep_omega01_2d(q, fluxes, grid, opts);

    const numeric::HamiltonianOperator h = numeric::build_hamiltonian_2d(q, FluxBias{FluxBias::optimal}, grid);
    try {
      const numeric::Spectrum s = numeric::spectrum_from(numeric::lowest_eigenpairs(h, 3, opts.lanczos));
      summary["numeric_optimal"] = {
          {"grid_n", grid.n()},
          {"levels_GHz", s.levels_ghz},
          {"omega01_GHz", s.omega01()},
          {"omega12_GHz", s.omega12()},
          {"anharmonicity_GHz", s.anharmonicity()},
      };
    } catch (const numeric::ConvergenceError& e) {
      summary["numeric_optimal"] = nullptr;
      flags.push_back(fmt::format("optimal point: {}", e.what()));
    }
  }

  std::vector<std::vector<Cell>> rows;
  long failed = 0;
  for (std::size_t i = 0; i < fluxes.size(); ++i) {
    const double f = fluxes[i];
    std::vector<Cell> row{f, analytic::omega01(q, FluxBias{f})};
    if (numeric) {
      const numeric::FluxPoint& p = points[i];
      row.emplace_back(p.omega01_ghz);
      row.emplace_back(p.omega12_ghz);
      row.emplace_back(p.ok() ? 0L : static_cast<long>(kExitNotConverged));
      if (!p.ok()) {
        ++failed;
        flags.push_back(fmt::format("flux {:.17g}: {}", f, p.error));
      }
    } else {
      row.emplace_back(std::nan(""));
      row.emplace_back(std::nan(""));
      row.emplace_back(0L);
    }
    rows.push_back(std::move(row));
  }
  out.write_table("spectrum", {"flux_phi0", "omega01_analytic_GHz", "omega01_numeric_GHz", "omega12_numeric_GHz", "error_code"},
                  rows);

  const analytic::PerturbativeSpectrum ps = analytic::perturbative_spectrum(q);
  if (ps.low_validity_warning) flags.push_back("perturbative expansion outside its validity range");
  if (q.quartic_sign_warning()) flags.push_back("alpha <= 1/8: quartic coefficient not positive");
  summary["analytic"] = {
      {"gap_GHz", ps.gap_ghz},
      {"anharmonicity_GHz", ps.anharmonicity_ghz},
      {"depsilon_df_GHz", ps.depsilon_df_ghz},
      {"validity_ratio", ps.validity_ratio},
      {"ecs_GHz", q.ecs_ghz()},
  };
  summary["failed_points"] = failed;
  summary["flags"] = flags;
  out.write_json("spectrum_summary", summary);
  finish(out, ctx, "spectrum");
  if (failed == 0) return kExitOk;
  return failed == static_cast<long>(fluxes.size()) ? kExitNotConverged : kExitPartialFailure;
}

// ---------------------------------------------------------------------------

int cmd_coherence(const RunContext& ctx) {
  const RunConfig& c = ctx.config;
  const ValidatedQubit q = validate_params(qubit_params(c));
  const auto [w01, w12] = qubit_frequencies(c, q);
  const CavityParams cav = cavity_params(c);
  const double omega_c = c.number("cavity.omega_c_ghz");
  const double chi = c.number("cqed.chi_mhz");
  const decoherence::QuasiparticleEnv env = quasiparticle_env(c);
  const analytic::JunctionMatrixElements me = analytic::junction_matrix_elements(q);
  const decoherence::FluxNoise noise = flux_noise(c);
  const double t_evol = c.number("noise.evolution_time_s");
  OutputSet out = open_outputs(ctx);
  json flags = json::array();

  std::vector<std::vector<Cell>> t1_rows;
  for (double t : temperature_sweep(c).values()) {
    const decoherence::QpRateTerms r = decoherence::qp_rate_terms(q, w01, env, t, me);
    t1_rows.push_back({t, r.nonequilibrium, r.equilibrium_down + r.equilibrium_up, r.total, 1.0 / r.total});
  }
  out.write_table("t1_vs_temperature",
                  {"temp_K", "gamma_neq_per_s", "gamma_eq_per_s", "gamma_total_per_s", "t1_qp_s"}, t1_rows);

  const double ratio = decoherence::ramsey_echo_ratio(noise.omega_ir, t_evol);
  std::vector<std::vector<Cell>> flux_rows;
  for (double f : flux_sweep(c).values()) {
    const double slope = analytic::domega01_df(q, FluxBias{f});
    const decoherence::FluxDephasing d = decoherence::flux_dephasing_rates(noise, slope, t_evol);
    flux_rows.push_back({f, slope, d.echo, d.ramsey, ratio});
  }
  out.write_table("dephasing_vs_flux",
                  {"flux_phi0", "domega01_df_GHz", "gamma_phi_echo_per_s", "gamma_phi_ramsey_per_s", "ramsey_echo_ratio"},
                  flux_rows);

  double g01 = 0.0;
  double g12 = 0.0;
  if (c.has("cqed.g01_mhz")) {
    g01 = c.number("cqed.g01_mhz");
    g12 = c.optional_number("cqed.g12_mhz").value_or(std::nan(""));
  } else {
    const cqed::DispersiveSet s = cqed::extract_couplings(w01, w12, cav.omega_c0_ghz(), omega_c, chi);
    g01 = s.g01_mhz;
    g12 = s.g12_mhz;
  }

  const double t_bath = c.number("noise.temperature_k");
  const decoherence::QpRateTerms qp = decoherence::qp_rate_terms(q, w01, env, t_bath, me);
  if (qp.frequency_not_small) flags.push_back("qubit frequency not small against the gap");
  if (qp.temperature_not_small) flags.push_back("temperature not small against the gap");
  const decoherence::EffectiveTemperature teff = decoherence::effective_temperature(attenuation_chain(c), omega_c);
  if (teff.clamped_low) flags.push_back("effective temperature clamped at the 1 mK lower bound");
  const double nbar = decoherence::thermal_photon_population(omega_c, teff.kelvin);
  const double gamma_th = decoherence::thermal_dephasing_rate(cav.kappa_mhz(), chi, nbar);

  json budget = {
      {"T1_qp_s", 1.0 / qp.total},
      {"T1_purcell_s", finite_or_null(cqed::purcell_t1(cav.kappa_mhz(), g01, w01, omega_c))},
      {"T_phi_thermal_s", finite_or_null(1.0 / gamma_th)},
      {"T_eff_K", teff.kelvin},
      {"nbar", nbar},
      {"ramsey_echo_ratio", ratio},
      {"inputs",
       {{"omega01_GHz", w01},
        {"omega12_GHz", w12},
        {"omega_c_GHz", omega_c},
        {"kappa_MHz", cav.kappa_mhz()},
        {"chi_MHz", chi},
        {"g01_MHz", g01},
        {"g12_MHz", finite_or_null(g12)},
        {"x_qp", env.x_qp},
        {"n_qp_per_um3", decoherence::nqp_from_xqp(env)},
        {"temperature_K", t_bath},
        {"matrix_elements", {{"large", me.large}, {"small", me.small}}}}},
      {"flags", flags},
      {"units", unit_conventions()},
  };
  out.write_json("coherence_budget", budget);
  finish(out, ctx, "coherence");
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_filter(const RunContext& ctx) {
  const RunConfig& c = ctx.config;
  const double tau = c.number("filter.tau_s");
  const double tau_pi = c.number("filter.tau_pi_s");
  const std::vector<double> omegas = omega_sweep(c).values();
  OutputSet out = open_outputs(ctx);

  json summary = json::array();
  for (double nd : c.number_list("filter.pulses")) {
    if (nd != std::floor(nd) || nd < 0.0) throw ConfigError("filter.pulses must be non-negative integers");
    const int n = static_cast<int>(nd);
    const filters::FilterSpec spec =
        n == 0 ? filters::FilterSpec::ramsey(tau) : filters::FilterSpec::cpmg(n, tau, tau_pi);
    std::vector<std::vector<Cell>> rows;
    double peak_w = omegas.front();
    double peak_g = -1.0;
    for (const auto& [w, g] : filters::filter_curve(spec, omegas)) {
      rows.push_back({w, g});
      if (g > peak_g) {
        peak_g = g;
        peak_w = w;
      }
    }
    out.write_table(fmt::format("filter_N{}", n), {"omega_rad_s", "g_N"}, rows);
    summary.push_back({{"pulses", n}, {"peak_omega_rad_s", peak_w}, {"peak_g", peak_g}});
  }
  out.write_json("filter_summary", {{"tau_s", tau}, {"tau_pi_s", tau_pi}, {"sequences", summary}});
  finish(out, ctx, "filter");
  return kExitOk;
}

// ---------------------------------------------------------------------------

FitKind parse_fit_kind(const std::string& name) {
  if (name == "spectrum") return FitKind::spectrum;
  if (name == "t1") return FitKind::t1;
  if (name == "envelope") return FitKind::envelope;
  if (name == "fluxnoise") return FitKind::fluxnoise;
  if (name == "decay") return FitKind::decay;
  throw ConfigError("unknown fit kind '" + name + "'");
}

std::string fit_kind_name(FitKind kind) {
  switch (kind) {
    case FitKind::spectrum: return "spectrum";
    case FitKind::t1: return "t1";
    case FitKind::envelope: return "envelope";
    case FitKind::fluxnoise: return "fluxnoise";
    case FitKind::decay: return "decay";
  }
  return "unknown";
}

json to_json(const fit::FitResult& r) {
  json residuals = json::array();
  for (double v : r.residuals) residuals.push_back(finite_or_null(v));
  return {
      {"parameters", json_map(r.parameters)},
      {"uncertainties", json_map(r.uncertainties)},
      {"derived", json_map(r.derived)},
      {"residuals", residuals},
      {"residual_norm", finite_or_null(r.residual_norm)},
      {"gradient_norm", finite_or_null(r.gradient_norm)},
      {"iterations", r.iterations},
      {"converged", r.converged},
      {"objective_history", r.objective_history},
      {"flags", r.flags},
  };
}

int cmd_fit(const RunContext& ctx, FitKind kind, const std::filesystem::path& data) {
  const RunConfig& c = ctx.config;
  fit::LmOptions lm;
  lm.max_iterations = static_cast<int>(c.integer("fit.max_iterations"));

  json doc = json::object();
  bool converged = true;
  switch (kind) {
    case FitKind::spectrum: {
      const fit::DataSeries d = read_series(data, "flux_phi0", "freq_GHz");
      fit::SpectrumFitOptions opts;
      opts.anharmonicity_ghz = c.optional_number("fit.anharmonicity_ghz");
      opts.anharmonicity_sigma_ghz = c.number("fit.anharmonicity_sigma_ghz");
      opts.lm = lm;
      const fit::FitResult r = fit::fit_spectrum(d, qubit_params(c), opts);
      converged = r.converged;
      doc = to_json(r);
      break;
    }
    case FitKind::t1: {
      const fit::DataSeries d = read_series(data, "temp_K", "t1_s");
      const ValidatedQubit q = validate_params(qubit_params(c));
      const double w01 = qubit_frequencies(c, q).first;
      const fit::FitResult r =
          fit::fit_xqp(d, q, w01, c.number("noise.delta0_uev"), analytic::junction_matrix_elements(q),
                       c.number("noise.n_cp_per_um3"));
      converged = r.converged;
      doc = to_json(r);
      break;
    }
    case FitKind::envelope: {
      const fit::DataSeries d = read_series(data, "time_s", "signal");
      const std::string shape = c.text("fit.shape");
      if (shape != "gaussian" && shape != "exponential" && shape != "both") {
        throw ConfigError("fit.shape must be gaussian, exponential or both");
      }
      const double t1 = c.number("fit.t1_s");
      for (const auto& [name, s] : {std::pair{"gaussian", decoherence::EnvelopeShape::gaussian},
                                    std::pair{"exponential", decoherence::EnvelopeShape::exponential}}) {
        if (shape != "both" && shape != name) continue;
        const fit::FitResult r = fit::fit_envelope(d, t1, s, lm);
        converged = converged && r.converged;
        doc[name] = to_json(r);
      }
      break;
    }
    case FitKind::fluxnoise: {
      const fit::DataSeries d = read_series(data, "flux_phi0", "gamma_e_per_s");
      const ValidatedQubit q = validate_params(qubit_params(c));
      const fit::FitResult r = fit::fit_flux_noise(d, q, c.number("fit.exclusion_window"));
      converged = r.converged;
      doc = to_json(r);
      break;
    }
    case FitKind::decay: {
      const fit::DataSeries d = read_series(data, "time_s", "signal");
      const fit::FitResult r = fit::fit_t1_exponential(d, lm);
      converged = r.converged;
      doc = to_json(r);
      break;
    }
  }

  OutputSet out = open_outputs(ctx);
  doc["kind"] = fit_kind_name(kind);
  doc["data_file"] = data.filename().string();
  out.write_json("fit_" + fit_kind_name(kind), doc);
  finish(out, ctx, "fit " + fit_kind_name(kind), {data});
  return converged ? kExitOk : kExitNotConverged;
}

// ---------------------------------------------------------------------------

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const numeric::ConvergenceError& e) {
    err << "error: " << e.what() << " (after " << e.iterations() << " iterations)\n";
    return kExitNotConverged;
  } catch (const fit::RankDeficientError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace csfq::cli
