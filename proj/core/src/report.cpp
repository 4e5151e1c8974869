#include "nlslab/report.hpp"

#include <fstream>

#include "nlslab/error.hpp"

namespace nlslab {

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

}  // namespace

void Report::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw Error(ErrorCode::invalid_argument, "report row has " + std::to_string(row.size()) + " fields, expected " +
                                                 std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

std::string library_version() { return NLSLAB_VERSION; }

std::string render_report(const Report& report) {
  std::string out = "# nlslab " + library_version() + "\n";
  out += "# kind = " + report.kind + "\n";
  for (const auto& [key, value] : report.config) out += "# config " + key + " = " + value + "\n";
  for (const auto& [key, value] : report.summary) out += "# summary " + key + " = " + value + "\n";
  out += std::string("# status = ") + (report.passed ? "pass" : "fail") + "\n";
  out += csv_line(report.columns);
  for (const auto& row : report.rows) out += csv_line(row);
  return out;
}

void write_report(const Report& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write report '" + path + "'");
  out << render_report(report);
}

}  // namespace nlslab
