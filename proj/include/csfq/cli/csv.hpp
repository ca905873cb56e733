#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "csfq/fit.hpp"

namespace csfq::cli {

/// Malformed input data; the message names file, line and column.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric CSV with one header row. Lines starting with '#' are comments.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> comments;
};

CsvTable parse_csv(const std::string& text, const std::string& source);
CsvTable read_csv(const std::filesystem::path& path);

/// Reads a two-column series with the exact header (x_name, y_name) and an
/// optional third column of y uncertainties whose name starts with "sigma".
fit::DataSeries read_series(const std::filesystem::path& path, const std::string& x_name,
                            const std::string& y_name);

using Cell = std::variant<double, long, std::string>;

/// %.17g for doubles, so written values round-trip exactly.
std::string format_cell(const Cell& cell);

/// Comma-separated, '.' decimal separator, LF line endings.
std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<Cell>>& rows);

}  // namespace csfq::cli
