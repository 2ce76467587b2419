#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncfact/group.hpp"
#include "ncfact/group_spec.hpp"
#include "ncfact/report.hpp"

namespace ncfact {

/// One codimension-2 class, with every quantity needed by `verify` and `table`.
struct SummaryRow {
  std::string class_id;
  std::string representative;  // hex bytes of the least member in NC
  std::uint64_t size_in_nc = 0;
  int r = 0;
  int order = 0;
  std::string u;
  std::string count;
  std::vector<std::string> count_by_position;
  int d1p = 0;
  int hp = 0;
  bool reducible = false;
};

struct FiberSummary {
  std::string fibers;            // number of distinct (2,1,...,1) targets
  std::string targets_expected;  // count_fact_by_composition(2,1,...,1)
  std::string total;             // sum of fiber sizes
  std::uint64_t mismatched = 0;  // fibers whose size differs from r of the target class
};

/// Everything `verify` derives by enumeration. Big numbers are decimal strings
/// so that the cached form round-trips exactly.
struct EnumerationSummary {
  std::string group;
  int p_max = 0;
  std::string order;
  std::string reflections;
  std::optional<bool> reflections_are_codim1;  // computed when |W| <= 10^4
  int coxeter_order = 0;
  int coxeter_length = 0;
  std::vector<std::string> rank_sizes;
  std::string nc_size;
  std::vector<std::string> multichains;  // p = 1..p_max
  std::vector<std::string> fact_k;       // k = 1..n
  std::string red_dp;
  std::optional<std::string> red_enumerated;
  std::vector<SummaryRow> rows;
  std::optional<FiberSummary> fibers;
  std::optional<std::string> hurwitz_orbit;
};

struct SummaryLimits {
  std::uint64_t codim1_scan_max_order = 10'000;
  std::uint64_t enumerate_red_max = 2'000'000;
  std::uint64_t hurwitz_max_red = 2'000;
};

EnumerationSummary compute_summary(const std::shared_ptr<const Group>& group, int p_max,
                                   const SummaryLimits& limits = {});

std::string summary_to_json(const EnumerationSummary& s);
EnumerationSummary summary_from_json(const std::string& text);

/// Single-file JSON cache keyed by "<group>@<version>#p<p_max>".
class SummaryCache {
 public:
  explicit SummaryCache(std::string path);
  std::optional<EnumerationSummary> load(const std::string& key) const;
  /// Rewrites the whole file through a temporary and a rename.
  void store(const std::string& key, const EnumerationSummary& summary) const;
  static std::string key_for(const std::string& group, int p_max);

 private:
  std::string path_;
};

/// Builds the named checks of `verify` from a summary.
Report make_verify_report(const GroupSpec& spec, const EnumerationSummary& s);

/// Table rows of a summary as report rows.
std::vector<ReportRow> report_rows(const EnumerationSummary& s);

/// Multiset comparison of expected (p,u) entries against enumerated (r,u) rows.
std::vector<ComparisonLine> compare_with_table(const GroupSpec& spec, const EnumerationSummary& s);

}  // namespace ncfact
