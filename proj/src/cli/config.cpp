#include "csfq/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace csfq::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError(key + ": expected a number, got '" + raw + "'");
  }
  return v;
}

const SchemaEntry* find_entry(const std::string& key) {
  const auto& schema = config_schema();
  const auto it = std::find_if(schema.begin(), schema.end(), [&](const SchemaEntry& e) { return e.key == key; });
  return it == schema.end() ? nullptr : &*it;
}

}  // namespace

const std::vector<SchemaEntry>& config_schema() {
  static const std::vector<SchemaEntry> schema = {
      {"qubit.alpha", "", "small-junction area ratio, 0 < alpha < 0.5"},
      {"qubit.ej_ghz", "", "Josephson energy of a large junction, GHz"},
      {"qubit.cs_ff", "", "shunt capacitance, fF"},
      {"qubit.ec_ghz", "", "charging energy of a large junction, GHz (2D model)"},

      {"cavity.omega_c0_ghz", "8.2175", "bare cavity frequency, GHz"},
      {"cavity.omega_c_ghz", "8.219", "dressed cavity frequency at f = 0.5, GHz"},
      {"cavity.kappa_c_mhz", "0.6", "external loss rate, MHz"},
      {"cavity.kappa_i_mhz", "0.7", "internal loss rate, MHz"},

      {"cqed.omega01_ghz", "", "measured qubit frequency, GHz (default: perturbative gap)"},
      {"cqed.omega12_ghz", "", "measured 1-2 frequency, GHz (default: gap + anharmonicity)"},
      {"cqed.chi_mhz", "0.892", "cavity pull chi, MHz"},
      {"cqed.g01_mhz", "", "coupling g01, MHz (default: extracted)"},
      {"cqed.g12_mhz", "", "coupling g12, MHz (default: extracted)"},

      {"noise.temperature_k", "0.01", "bath temperature for the budget, K"},
      {"noise.x_qp", "", "normalized quasiparticle density"},
      {"noise.n_qp_per_um3", "0.6", "quasiparticle density, 1/um^3 (used when x_qp is unset)"},
      {"noise.delta0_uev", "200", "superconducting gap, micro-eV"},
      {"noise.n_cp_per_um3", "4.9e6", "Cooper-pair density, 1/um^3"},
      {"noise.flux_amplitude_uphi0", "1.8", "1/f flux-noise amplitude sqrt(A_Phi), micro-Phi0"},
      {"noise.acquisition_time_s", "2.45", "single-point acquisition time setting omega_ir, s"},
      {"noise.evolution_time_s", "1e-6", "free-evolution time t in the Ramsey/echo ratio, s"},

      {"attenuation.stages", "300:1e-7,4:1e-5,0.7:1e-4,0.1:3.56e-3,0.01:1",
       "comma-separated temperature_K:weight pairs"},
      {"attenuation.resistance_ohm", "50", "load resistance, ohm"},

      {"grid.n", "80", "grid points per axis (even, >= 16)"},
      {"grid.numeric", "true", "run the 2D solves in the spectrum command"},
      {"grid.tolerance", "1e-8", "Lanczos residual tolerance relative to E_J"},
      {"grid.max_iterations", "5000", "Lanczos iteration cap"},
      {"grid.seed", "20190401", "Lanczos start-vector seed"},

      {"sweep.flux_start", "0.49", "first flux bias, Phi0"},
      {"sweep.flux_stop", "0.51", "last flux bias, Phi0"},
      {"sweep.flux_steps", "21", "flux points (>= 2)"},
      {"sweep.temp_start_k", "0.01", "first temperature, K"},
      {"sweep.temp_stop_k", "0.2", "last temperature, K"},
      {"sweep.temp_steps", "20", "temperature points (>= 2)"},

      {"filter.pulses", "1,20", "comma-separated pi-pulse counts (0 = Ramsey)"},
      {"filter.tau_s", "1e-4", "sequence length, s"},
      {"filter.tau_pi_s", "0", "pi-pulse duration, s"},
      {"filter.omega_start", "1e3", "lowest angular frequency, rad/s"},
      {"filter.omega_stop", "1e8", "highest angular frequency, rad/s"},
      {"filter.omega_steps", "500", "log-spaced frequency points (>= 2)"},

      {"fit.anharmonicity_ghz", "", "measured anharmonicity for the spectrum fit, GHz"},
      {"fit.anharmonicity_sigma_ghz", "0.001", "uncertainty of fit.anharmonicity_ghz, GHz"},
      {"fit.exclusion_window", "0.002", "flux-noise fit skips |f - 0.5| <= window"},
      {"fit.t1_s", "9e-5", "T1 used by the envelope fit, s"},
      {"fit.shape", "both", "envelope shape: gaussian, exponential or both"},
      {"fit.max_iterations", "200", "Levenberg-Marquardt iteration cap"},

      {"output.format", "csv", "table format: csv or json"},
  };
  return schema;
}

RunConfig RunConfig::from_string(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config line " + std::to_string(e.line()) + ": " + e.message());
  }
  RunConfig c;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("key '" + section + "' outside a section");
    for (const auto& [key, value] : body) c.set(section + "." + key, value.data());
  }
  return c;
}

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return from_string(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void RunConfig::assign(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("override '" + assignment + "' is not of the form section.key=value");
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (!find_entry(key)) throw ConfigError("unknown config key '" + key + "'");
  values_[key] = trim(value);
}

std::optional<std::string> RunConfig::lookup(const std::string& key) const {
  const SchemaEntry* e = find_entry(key);
  if (!e) throw std::logic_error("config key missing from schema: " + key);
  const auto it = values_.find(key);
  if (it != values_.end() && !it->second.empty()) return it->second;
  if (!e->default_value.empty()) return e->default_value;
  return std::nullopt;
}

bool RunConfig::has(const std::string& key) const { return lookup(key).has_value(); }

std::optional<double> RunConfig::optional_number(const std::string& key) const {
  const auto v = lookup(key);
  if (!v) return std::nullopt;
  return parse_number(key, *v);
}

double RunConfig::number(const std::string& key) const {
  const auto v = optional_number(key);
  if (!v) throw ConfigError("missing required config key '" + key + "'");
  return *v;
}

long RunConfig::integer(const std::string& key) const {
  const double v = number(key);
  if (v != std::floor(v) || std::abs(v) > 1e15) throw ConfigError(key + ": expected an integer");
  return static_cast<long>(v);
}

bool RunConfig::boolean(const std::string& key) const {
  std::string v = text(key);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": expected a boolean, got '" + v + "'");
}

std::string RunConfig::text(const std::string& key) const {
  const auto v = lookup(key);
  if (!v) throw ConfigError("missing required config key '" + key + "'");
  return *v;
}

std::vector<double> RunConfig::number_list(const std::string& key) const {
  std::vector<double> out;
  std::stringstream ss(text(key));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(key, item));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

std::map<std::string, std::string> RunConfig::effective() const {
  std::map<std::string, std::string> out;
  for (const SchemaEntry& e : config_schema()) {
    if (const auto v = lookup(e.key)) out[e.key] = *v;
  }
  return out;
}

std::string RunConfig::canonical() const {
  std::string out;
  for (const auto& [k, v] : effective()) out += k + "=" + v + "\n";
  return out;
}

std::vector<double> SweepRange::values() const {
  if (steps < 2) throw ConfigError("sweep steps must be >= 2");
  if (logarithmic && !(start > 0.0 && stop > 0.0)) throw ConfigError("log sweep bounds must be positive");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double u = static_cast<double>(i) / (steps - 1);
    out[static_cast<std::size_t>(i)] =
        logarithmic ? std::exp(std::log(start) + u * (std::log(stop) - std::log(start))) : start + u * (stop - start);
  }
  // Pin the end points so reversed or symmetric sweeps hit them exactly.
  out.front() = start;
  out.back() = stop;
  return out;
}

QubitParams qubit_params(const RunConfig& c) {
  QubitParams q;
  q.alpha = c.number("qubit.alpha");
  q.ej_ghz = c.number("qubit.ej_ghz");
  q.cs_ff = c.number("qubit.cs_ff");
  q.ec_ghz = c.optional_number("qubit.ec_ghz");
  return q;
}

CavityParams cavity_params(const RunConfig& c) {
  return CavityParams(c.number("cavity.omega_c0_ghz"), c.number("cavity.kappa_c_mhz"), c.number("cavity.kappa_i_mhz"));
}

numeric::GridSpec grid_spec(const RunConfig& c) { return numeric::GridSpec(static_cast<int>(c.integer("grid.n"))); }

numeric::LanczosOptions lanczos_options(const RunConfig& c) {
  numeric::LanczosOptions o;
  o.tolerance = c.number("grid.tolerance");
  o.max_iterations = static_cast<int>(c.integer("grid.max_iterations"));
  o.seed = static_cast<std::uint64_t>(c.integer("grid.seed"));
  if (!(o.tolerance > 0.0) || o.max_iterations < 1) throw ConfigError("grid.tolerance and grid.max_iterations must be positive");
  return o;
}

namespace {

SweepRange sweep(const RunConfig& c, const std::string& start, const std::string& stop, const std::string& steps,
                 bool log) {
  SweepRange r{c.number(start), c.number(stop), static_cast<int>(c.integer(steps)), log};
  if (r.steps < 2) throw ConfigError(steps + " must be >= 2");
  return r;
}

}  // namespace

SweepRange flux_sweep(const RunConfig& c) {
  return sweep(c, "sweep.flux_start", "sweep.flux_stop", "sweep.flux_steps", false);
}

SweepRange temperature_sweep(const RunConfig& c) {
  return sweep(c, "sweep.temp_start_k", "sweep.temp_stop_k", "sweep.temp_steps", false);
}

SweepRange omega_sweep(const RunConfig& c) {
  return sweep(c, "filter.omega_start", "filter.omega_stop", "filter.omega_steps", true);
}

decoherence::AttenuationChain attenuation_chain(const RunConfig& c) {
  decoherence::AttenuationChain chain;
  chain.resistance_ohm = c.number("attenuation.resistance_ohm");
  std::stringstream ss(c.text("attenuation.stages"));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("attenuation.stages: expected temperature:weight, got '" + item + "'");
    chain.stages.push_back({parse_number("attenuation.stages", item.substr(0, colon)),
                            parse_number("attenuation.stages", item.substr(colon + 1))});
  }
  chain.validate();
  return chain;
}

decoherence::FluxNoise flux_noise(const RunConfig& c) {
  decoherence::FluxNoise n = decoherence::FluxNoise::from_micro_flux_quanta(c.number("noise.flux_amplitude_uphi0"));
  const double t_acq = c.number("noise.acquisition_time_s");
  if (!(t_acq > 0.0)) throw ConfigError("noise.acquisition_time_s must be positive");
  n.omega_ir = 2.0 * std::numbers::pi / t_acq;
  n.validate();
  return n;
}

decoherence::QuasiparticleEnv quasiparticle_env(const RunConfig& c) {
  decoherence::QuasiparticleEnv env;
  env.delta0_uev = c.number("noise.delta0_uev");
  env.n_cp_per_um3 = c.number("noise.n_cp_per_um3");
  if (const auto x = c.optional_number("noise.x_qp")) {
    env.x_qp = *x;
  } else {
    env.x_qp = decoherence::xqp_from_nqp(c.number("noise.n_qp_per_um3"), env.n_cp_per_um3);
  }
  env.validate();
  return env;
}

}  // namespace csfq::cli
