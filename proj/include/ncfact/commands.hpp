#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncfact/group.hpp"
#include "ncfact/report.hpp"

namespace ncfact {

struct CommandOptions {
  int p_max = 5;
  EnumerationBudget budget;
  std::optional<std::string> cache_path;
  bool use_cache = true;
  bool timings = false;
};

enum class CountKind { Red, FactK, Composition, ByClass };

CountKind parse_count_kind(const std::string& text);

/// Parses "2,1,1" into {2,1,1}.
std::vector<int> parse_composition(const std::string& text);

Report cmd_info(const std::string& group);
Report cmd_verify(const std::string& group, const CommandOptions& options);
/// `argument` is k for fact-k and the composition for composition.
Report cmd_count(const std::string& group, CountKind kind, const std::string& argument,
                 const CommandOptions& options);
/// Accepts a group string or a table row label such as "B_n" or "G(e,e,4)".
Report cmd_table(const std::string& target, const CommandOptions& options);

}  // namespace ncfact
