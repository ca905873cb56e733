// csfq: spectra, coherence budgets, filter functions and fits for a
// capacitively shunted flux qubit in a 3D cavity.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csfq/cli/commands.hpp"

namespace {

int default_workers() {
  const char* env = std::getenv("CSFQ_WORKERS");
  if (!env || !*env) return 1;
  try {
    const int n = std::stoi(env);
    return n >= 0 ? n : 1;
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring non-numeric CSFQ_WORKERS='" << env << "'\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace csfq::cli;

  CLI::App app{"Capacitively shunted flux qubit models"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir = ".";
  int workers = default_workers();
  std::string format;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "INI config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--workers", workers, "concurrent sweep points (0: OpenMP default; env CSFQ_WORKERS)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--set", overrides, "override a config key: section.key=value");

  CLI::App* spectrum = app.add_subcommand("spectrum", "flux sweep of the analytic and 2D spectra");
  CLI::App* coherence = app.add_subcommand("coherence", "decoherence channels and budget");
  CLI::App* filter = app.add_subcommand("filter", "dynamical-decoupling filter functions");
  CLI::App* fit = app.add_subcommand("fit", "fit a model to a data file");
  std::string kind;
  std::string data;
  double exclusion = -1.0;
  fit->add_option("kind", kind, "spectrum | t1 | envelope | fluxnoise | decay")
      ->required()
      ->check(CLI::IsMember({"spectrum", "t1", "envelope", "fluxnoise", "decay"}));
  fit->add_option("data", data, "CSV data file")->required();
  fit->add_option("--exclusion-window", exclusion, "flux-noise fit: skip |f - 0.5| <= window")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  return run_guarded(
      [&]() -> int {
        RunContext ctx;
        if (!config_path.empty()) ctx.config = RunConfig::from_file(config_path);
        for (const std::string& s : overrides) ctx.config.assign(s);
        if (!format.empty()) ctx.config.set("output.format", format);
        if (exclusion >= 0.0) {
          std::ostringstream w;
          w << std::setprecision(17) << exclusion;
          ctx.config.set("fit.exclusion_window", w.str());
        }
        ctx.out_dir = out_dir;
        ctx.workers = workers;

        if (spectrum->parsed()) return cmd_spectrum(ctx);
        if (coherence->parsed()) return cmd_coherence(ctx);
        if (filter->parsed()) return cmd_filter(ctx);
        return cmd_fit(ctx, parse_fit_kind(kind), data);
      },
      std::cerr);
}
