#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "csfq/cli/csv.hpp"

namespace csfq::cli {

inline constexpr const char* kToolVersion = "0.1.0";

std::string sha256_hex(std::string_view bytes);

enum class TableFormat { csv, json };

TableFormat parse_table_format(const std::string& name);

/// Writes the files of one run into a directory and records them for the
/// manifest. Output is byte-for-byte a function of the inputs: no clocks,
/// hostnames or absolute paths are written.
class OutputSet {
 public:
  OutputSet(std::filesystem::path dir, TableFormat format);

  /// name.csv or name.json depending on the table format.
  void write_table(const std::string& name, const std::vector<std::string>& header,
                   const std::vector<std::vector<Cell>>& rows);
  void write_json(const std::string& name, const nlohmann::json& doc);

  /// manifest.json: command, version, input hash, effective config, data
  /// file hashes, unit conventions and the list of files written.
  void write_manifest(const std::string& command, const std::string& canonical_config,
                      const nlohmann::json& config, const std::vector<std::filesystem::path>& data_files);

  const std::vector<std::string>& files() const { return files_; }
  const std::filesystem::path& dir() const { return dir_; }

 private:
  void write_file(const std::string& name, const std::string& bytes);

  std::filesystem::path dir_;
  TableFormat format_;
  std::vector<std::string> files_;
};

/// Unit conventions shared by every output.
nlohmann::json unit_conventions();

}  // namespace csfq::cli
