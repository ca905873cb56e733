#include "csfq/cli/output.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "csfq/cli/config.hpp"

namespace csfq::cli {

namespace {

std::string read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// NaN and infinities are not JSON; write them as null.
nlohmann::json cell_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return std::isfinite(*d) ? nlohmann::json(*d) : nlohmann::json();
  if (const long* i = std::get_if<long>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw ConfigError("output format must be csv or json, got '" + name + "'");
}

nlohmann::json unit_conventions() {
  return {
      {"energy", "E/h in GHz (cyclic)"},
      {"cavity_rates_and_couplings", "MHz (cyclic)"},
      {"flux", "normalized flux f = Phi/Phi0"},
      {"rates", "1/s"},
      {"times", "s"},
      {"temperature", "K"},
      {"qp_and_flux_noise_rates", "angular: E/hbar = 2*pi*1e9*E[GHz] per second"},
      {"purcell_and_thermal_photon_rates", "cyclic: kappa[MHz] read as kappa*1e6 per second"},
      {"filter_frequency", "rad/s"},
  };
}

OutputSet::OutputSet(std::filesystem::path dir, TableFormat format) : dir_(std::move(dir)), format_(format) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_)) throw ConfigError("cannot create output directory " + dir_.string());
}

void OutputSet::write_file(const std::string& name, const std::string& bytes) {
  const std::filesystem::path p = dir_ / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << bytes;
  out.close();
  if (!out) throw ConfigError("cannot write " + p.string());
  files_.push_back(name);
}

void OutputSet::write_table(const std::string& name, const std::vector<std::string>& header,
                            const std::vector<std::vector<Cell>>& rows) {
  if (format_ == TableFormat::csv) {
    write_file(name + ".csv", render_csv(header, rows));
    return;
  }
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) obj[header[i]] = cell_json(row[i]);
    doc.push_back(std::move(obj));
  }
  write_json(name, {{"columns", header}, {"rows", doc}});
}

void OutputSet::write_json(const std::string& name, const nlohmann::json& doc) {
  write_file(name + ".json", doc.dump(2) + "\n");
}

void OutputSet::write_manifest(const std::string& command, const std::string& canonical_config,
                               const nlohmann::json& config, const std::vector<std::filesystem::path>& data_files) {
  std::string hashed = "command=" + command + "\n" + canonical_config;
  nlohmann::json data = nlohmann::json::array();
  for (const auto& p : data_files) {
    const std::string digest = sha256_hex(read_bytes(p));
    hashed += "data=" + digest + "\n";
    data.push_back({{"file", p.filename().string()}, {"sha256", digest}});
  }
  nlohmann::json m = {
      {"tool", "csfq"},
      {"version", kToolVersion},
      {"command", command},
      {"inputs_sha256", sha256_hex(hashed)},
      {"config", config},
      {"data_files", data},
      {"units", unit_conventions()},
      {"outputs", files_},
  };
  write_json("manifest", m);
}

}  // namespace csfq::cli
