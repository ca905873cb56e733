#pragma once

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "csfq/cli/config.hpp"
#include "csfq/fit.hpp"

namespace csfq::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitNotConverged = 2,
  kExitPartialFailure = 3,
};

struct RunContext {
  RunConfig config;
  std::filesystem::path out_dir = ".";
  /// Concurrent flux points in sweeps.
  int workers = 1;
};

/// Writes spectrum.{csv,json}, spectrum_summary.json and manifest.json.
int cmd_spectrum(const RunContext& ctx);

/// Writes t1_vs_temperature, dephasing_vs_flux, coherence_budget.json and manifest.json.
int cmd_coherence(const RunContext& ctx);

/// Writes one filter_N<k> table per pulse count plus filter_summary.json.
int cmd_filter(const RunContext& ctx);

enum class FitKind { spectrum, t1, envelope, fluxnoise, decay };

FitKind parse_fit_kind(const std::string& name);
std::string fit_kind_name(FitKind kind);

/// Writes fit_<kind>.json. Returns kExitOk only when every fit converged.
int cmd_fit(const RunContext& ctx, FitKind kind, const std::filesystem::path& data);

nlohmann::json to_json(const fit::FitResult& r);

/// Runs a command body, reporting exceptions on `err` and mapping them to
/// exit codes (configuration and parse errors 1, solver failures 2).
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace csfq::cli
