#pragma once

// Run configuration: an INI file with one section per module. Every key has
// an entry in a fixed schema; unknown keys are rejected so that typos fail
// loudly. `section.key=value` assignments override file values.

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csfq/decoherence.hpp"
#include "csfq/grid.hpp"
#include "csfq/lanczos.hpp"
#include "csfq/params.hpp"

namespace csfq::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SchemaEntry {
  std::string key;            ///< section.key
  std::string default_value;  ///< empty: optional without default
  std::string description;
};

const std::vector<SchemaEntry>& config_schema();

class RunConfig {
 public:
  RunConfig() = default;

  static RunConfig from_file(const std::filesystem::path& path);
  static RunConfig from_string(const std::string& text);

  /// Applies "section.key=value".
  void assign(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  std::optional<double> optional_number(const std::string& key) const;
  /// Throws ConfigError when absent without a schema default or malformed.
  double number(const std::string& key) const;
  long integer(const std::string& key) const;
  bool boolean(const std::string& key) const;
  std::string text(const std::string& key) const;
  std::vector<double> number_list(const std::string& key) const;

  /// Every schema key with its effective value, one "key=value" per line,
  /// sorted. Keys without a value are omitted.
  std::string canonical() const;
  std::map<std::string, std::string> effective() const;

 private:
  std::optional<std::string> lookup(const std::string& key) const;
  std::map<std::string, std::string> values_;
};

struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  int steps = 2;
  bool logarithmic = false;

  std::vector<double> values() const;
};

QubitParams qubit_params(const RunConfig& c);
CavityParams cavity_params(const RunConfig& c);
numeric::GridSpec grid_spec(const RunConfig& c);
numeric::LanczosOptions lanczos_options(const RunConfig& c);
SweepRange flux_sweep(const RunConfig& c);
SweepRange temperature_sweep(const RunConfig& c);
SweepRange omega_sweep(const RunConfig& c);
decoherence::AttenuationChain attenuation_chain(const RunConfig& c);
decoherence::FluxNoise flux_noise(const RunConfig& c);
/// x_qp from noise.x_qp, else from noise.n_qp_per_um3.
decoherence::QuasiparticleEnv quasiparticle_env(const RunConfig& c);

}  // namespace csfq::cli
