#include "ncfact/commands.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <charconv>
#include <sstream>

#include "ncfact/closedform.hpp"
#include "ncfact/errors.hpp"
#include "ncfact/facto.hpp"
#include "ncfact/nc_poset.hpp"
#include "ncfact/summary.hpp"

namespace ncfact {

namespace {

using Clock = std::chrono::steady_clock;

std::string dec(const BigInt& x) { return to_decimal(x); }

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(std::string("expected an integer for ") + what + ", got '" + text + "'");
  }
  return value;
}

void finish(Report& report, const CommandOptions& options, Clock::time_point start) {
  report.budget = options.budget.max_order;
  if (options.timings) {
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  }
}

EnumerationSummary obtain_summary(const GroupSpec& spec, const CommandOptions& options) {
  const std::string key = SummaryCache::key_for(spec.name(), options.p_max);
  std::optional<SummaryCache> cache;
  if (options.cache_path && options.use_cache) {
    cache.emplace(*options.cache_path);
    if (auto hit = cache->load(key)) return *hit;
  }
  EnumerationSummary summary = compute_summary(build_group(spec, options.budget), options.p_max);
  if (cache) cache->store(key, summary);
  return summary;
}

std::string normalize_label(std::string_view text) {
  std::string out;
  for (const char c : text) {
    if (c == ' ' || c == '_') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<std::size_t> rows_matching(const std::string& target) {
  const std::string want = normalize_label(target);
  std::vector<std::size_t> out;
  const auto& rows = ll_table();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string& label = rows[i].label;
    const std::string first = label.substr(0, label.find(' '));
    if (normalize_label(label) == want || normalize_label(first) == want) out.push_back(i);
  }
  return out;
}

void describe_symbolic_row(Report& report, const TableRow& row) {
  std::string entries;
  for (const auto& e : row.entries) entries += (entries.empty() ? "" : ", ") + ("(" + e.p + ", " + e.u + ")");
  const std::string tag = row.condition.empty() ? row.label : row.label + " [" + row.condition + "]";
  report.values.emplace_back(tag + " prefactor", row.prefactor);
  report.values.emplace_back(tag + " entries (p, u)", entries);
  if (!row.isodiscriminantal.empty()) {
    report.values.emplace_back(tag + " isodiscriminantal", row.isodiscriminantal);
  }
  if (!row.reference_degrees.empty()) {
    report.values.emplace_back(tag + " degrees", join(row.reference_degrees));
  }
}

void describe_expected(Report& report, const ExpectedRow& row) {
  std::string entries;
  for (const auto& e : row.entries) entries += (entries.empty() ? "" : ", ") + ("(" + dec(e.p) + "," + dec(e.u) + ")");
  report.values.emplace_back("table row", row.row_label);
  report.values.emplace_back("prefactor (n-2)! h^(n-1) / |W|", to_fraction_string(row.prefactor));
  report.values.emplace_back("expected (p,u)", entries);
}

// Per-class counts the B_n row would imply at the same rank, next to the
// enumerated ones. Printed for information only.
std::string proxy_count_note(const GroupSpec& spec, const EnumerationSummary& s) {
  const GroupSpec b = GroupSpec::B(spec.rank());
  const ExpectedRow row = expected_ll_data(b);
  const InvariantData bdata = invariant_data(b);
  const int n = spec.rank();
  const Rational scale = Rational(factorial(n - 1) * power(bdata.coxeter_number(), n - 1)) /
                         Rational(bdata.order);
  std::vector<std::pair<BigInt, Rational>> implied;
  for (const auto& e : row.entries) implied.emplace_back(e.p, scale * Rational(e.u));
  std::sort(implied.begin(), implied.end());
  std::vector<std::pair<int, BigInt>> enumerated;
  for (const auto& r : s.rows) enumerated.emplace_back(r.r, from_decimal(r.count));
  std::sort(enumerated.begin(), enumerated.end());
  std::string out = "informational: " + b.name() + "-implied (p,count) =";
  for (const auto& [p, c] : implied) out += " (" + dec(p) + "," + to_fraction_string(c) + ")";
  out += "; enumerated (r,count) =";
  for (const auto& [r, c] : enumerated) out += " (" + std::to_string(r) + "," + dec(c) + ")";
  return out;
}

}  // namespace

CountKind parse_count_kind(const std::string& text) {
  if (text == "red") return CountKind::Red;
  if (text == "fact-k") return CountKind::FactK;
  if (text == "composition") return CountKind::Composition;
  if (text == "by-class") return CountKind::ByClass;
  throw ParseError("unknown count kind '" + text + "' (red, fact-k, composition, by-class)");
}

std::vector<int> parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(parse_int(item, "composition part"));
  if (parts.empty()) throw ParseError("empty composition");
  return parts;
}

Report cmd_info(const std::string& group) {
  const auto start = Clock::now();
  const GroupSpec spec = parse_group(group);
  const InvariantData data = invariant_data(spec);
  Report report;
  report.command = "info";
  report.group = spec.name();
  BigInt reflections = 0;
  for (const int d : data.degrees) reflections += d - 1;
  report.values = {
      {"rank", std::to_string(data.rank)},
      {"degrees", join(data.degrees)},
      {"h", std::to_string(data.coxeter_number())},
      {"|W|", dec(data.order)},
      {"#reflections", dec(reflections)},
      {"2-reflection group", spec.is_two_reflection_group() ? "yes" : "no"},
      {"Cat(W)", dec(fuss_catalan(data, 1))},
      {"LL-number n! h^n / |W|", dec(ll_number(data))},
      {"deg D", dec(deg_discriminant(data))},
      {"deg J", dec(deg_jacobian(data))},
  };
  if (data.rank >= 2) {
    report.values.emplace_back("|fact_(n-1)| closed form", dec(submax_total_closed(data)));
  }
  if (const auto row = table_row_index(spec)) report.values.emplace_back("table row", ll_table()[*row].label);
  finish(report, CommandOptions{}, start);
  return report;
}

Report cmd_verify(const std::string& group, const CommandOptions& options) {
  const auto start = Clock::now();
  const GroupSpec spec = parse_group(group);
  Report report = make_verify_report(spec, obtain_summary(spec, options));
  finish(report, options, start);
  return report;
}

Report cmd_count(const std::string& group, CountKind kind, const std::string& argument,
                 const CommandOptions& options) {
  const auto start = Clock::now();
  const GroupSpec spec = parse_group(group);
  Report report;
  report.command = "count";
  report.group = spec.name();
  const auto g = build_group(spec, options.budget);
  const int n = g->rank();
  std::vector<int> composition;
  int k = 0;
  if (kind == CountKind::FactK) {
    k = parse_int(argument, "k");
    if (k < 1 || k > n) throw ParseError("k must lie in 1.." + std::to_string(n));
  } else if (kind == CountKind::Composition) {
    composition = parse_composition(argument);
    int sum = 0;
    for (const int part : composition) {
      if (part < 1) throw ParseError("composition parts must be positive");
      sum += part;
    }
    if (sum != n) {
      throw ParseError("composition " + argument + " sums to " + std::to_string(sum) + ", rank is " +
                       std::to_string(n));
    }
  }
  const NcPoset nc = build_nc(g);
  switch (kind) {
    case CountKind::Red:
      report.values.emplace_back("|Red(c)|", dec(count_fact_by_composition(nc, std::vector<int>(n, 1))));
      break;
    case CountKind::FactK:
      report.values.emplace_back("|fact_" + std::to_string(k) + "(c)|", dec(count_fact_k(nc, k)));
      break;
    case CountKind::Composition:
      report.values.emplace_back("|fact_(" + join(composition) + ")(c)|",
                                 dec(count_fact_by_composition(nc, composition)));
      break;
    case CountKind::ByClass: {
      for (const auto& row : submaximal_by_class(nc)) {
        std::string label = "class " + row.cls.id.short_hex() + " (order " +
                            std::to_string(row.element_order) + ", parabolic " +
                            (row.parabolic_reducible ? "reducible" : "irreducible") + ")";
        report.values.emplace_back(std::move(label), dec(row.count_submax));
        report.rows.push_back({row.cls.id.short_hex(), row.r, dec(row.u), dec(row.count_submax),
                               row.parabolic.d1, row.parabolic.h});
      }
      break;
    }
  }
  finish(report, options, start);
  return report;
}

Report cmd_table(const std::string& target, const CommandOptions& options) {
  const auto start = Clock::now();
  Report report;
  report.command = "table";
  std::optional<GroupSpec> spec;
  try {
    spec = parse_group(target);
  } catch (const Error&) {
    const auto matches = rows_matching(target);
    if (matches.empty()) throw;
    report.group = target;
    for (const std::size_t i : matches) describe_symbolic_row(report, ll_table()[i]);
    finish(report, options, start);
    return report;
  }

  report.group = spec->name();
  std::optional<ExpectedRow> expected;
  try {
    expected = expected_ll_data(*spec);
    describe_expected(report, *expected);
  } catch (const NoTableRow& e) {
    report.notes.push_back(e.what());
  }

  const auto group = build_group(*spec, options.budget);
  if (!group->enumerable()) {
    try {
      group->length_table();
    } catch (const BudgetExceeded& e) {
      report.notes.push_back(std::string("enumeration skipped: ") + e.what());
    }
    finish(report, options, start);
    return report;
  }

  const EnumerationSummary s = obtain_summary(*spec, options);
  report.rows = report_rows(s);
  if (expected) {
    report.comparison = compare_with_table(*spec, s);
  } else if (spec->family() == Family::GD1N && spec->rank() >= 2) {
    report.notes.push_back(proxy_count_note(*spec, s));
  }
  finish(report, options, start);
  return report;
}

}  // namespace ncfact
