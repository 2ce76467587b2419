#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncfact {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// One codimension-2 stratum as printed by the CLI.
struct ReportRow {
  std::string class_id;
  int r = 0;
  std::string u;
  std::string count;
  int d1p = 0;
  int hp = 0;
};

/// Expected table entry next to the enumerated one; either side may be
/// empty when the multisets differ in size.
struct ComparisonLine {
  std::string expected;
  std::string enumerated;
  bool match = false;
};

/// Result of one CLI command. Serializes deterministically: nothing in it
/// depends on wall-clock time unless timings were requested.
struct Report {
  std::string command;
  std::string group;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Check> checks;
  std::vector<ReportRow> rows;
  std::vector<ComparisonLine> comparison;
  std::vector<std::string> notes;
  std::uint64_t budget = 0;
  std::optional<double> seconds;

  bool pass() const;
  void add_check(std::string name, std::string expected, std::string actual);
  void add_check(std::string name, std::string expected, std::string actual, bool pass);
};

enum class OutputFormat { Markdown, Json, Csv };

OutputFormat parse_format(const std::string& text);

std::string to_json(const Report& report);
std::string to_markdown(const Report& report);
std::string to_csv(const Report& report);
std::string render(const Report& report, OutputFormat format);

/// Version string written into reports and cache keys.
std::string library_version();

}  // namespace ncfact
