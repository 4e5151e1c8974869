#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nlslab {

/// A tabular experiment result. Rendered as CSV preceded by a block of
/// `# key = value` lines (artifact version, config echo, summary).
struct Report {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool passed = true;

  void add_summary(std::string key, std::string value) { summary.emplace_back(std::move(key), std::move(value)); }
  /// Throws invalid-argument when the row width differs from the columns.
  void add_row(std::vector<std::string> row);
};

std::string library_version();

std::string render_report(const Report& report);
void write_report(const Report& report, const std::string& path);

}  // namespace nlslab
