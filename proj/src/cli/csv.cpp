#include "csfq/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace csfq::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CsvTable parse_csv(const std::string& text, const std::string& source) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      t.comments.push_back(s);
      continue;
    }
    std::vector<std::string> fields = split(s);
    if (t.header.empty()) {
      t.header = std::move(fields);
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw ParseError(fmt::format("{}:{}:{}: expected {} fields, found {}", source, lineno,
                                   std::min(fields.size(), t.header.size()) + 1, t.header.size(), fields.size()));
    }
    std::vector<double> row;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const std::string& f = fields[c];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v)) {
        throw ParseError(fmt::format("{}:{}:{}: expected a finite number, got '{}'", source, lineno, c + 1, f));
      }
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (t.header.empty()) throw ParseError(source + ":1:1: empty file, expected a header row");
  if (t.rows.empty()) throw ParseError(fmt::format("{}:{}:1: no data rows after the header", source, lineno + 1));
  return t;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open data file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str(), path.string());
}

fit::DataSeries read_series(const std::filesystem::path& path, const std::string& x_name,
                            const std::string& y_name) {
  const CsvTable t = read_csv(path);
  const bool with_sigma = t.header.size() == 3 && t.header[2].rfind("sigma", 0) == 0;
  if (t.header.size() < 2 || t.header[0] != x_name || t.header[1] != y_name || (t.header.size() > 2 && !with_sigma)) {
    throw ParseError(fmt::format("{}:1:1: expected header '{},{}[,sigma...]'", path.string(), x_name, y_name));
  }
  fit::DataSeries d;
  d.x_label = x_name;
  d.y_label = y_name;
  if (with_sigma) d.sigma.emplace();
  for (const auto& row : t.rows) {
    d.x.push_back(row[0]);
    d.y.push_back(row[1]);
    if (with_sigma) d.sigma->push_back(row[2]);
  }
  return d;
}

std::string format_cell(const Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) {
    if (std::isnan(*d)) return "nan";
    if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
    return fmt::format("{:.17g}", *d);
  }
  if (const long* i = std::get_if<long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<Cell>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_cell(row[i]);
    out += '\n';
  }
  return out;
}

}  // namespace csfq::cli
