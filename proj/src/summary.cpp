#include "ncfact/summary.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "ncfact/closedform.hpp"
#include "ncfact/errors.hpp"
#include "ncfact/facto.hpp"
#include "ncfact/nc_poset.hpp"

namespace ncfact {

namespace {

using nlohmann::ordered_json;

std::string dec(const BigInt& x) { return to_decimal(x); }

std::string pair_text(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

EnumerationSummary compute_summary(const std::shared_ptr<const Group>& group, int p_max,
                                   const SummaryLimits& limits) {
  const Group& g = *group;
  const int n = g.rank();
  EnumerationSummary s;
  s.group = g.name();
  s.p_max = p_max;

  const LengthTable& table = g.length_table();
  s.order = std::to_string(table.index.size());
  s.reflections = std::to_string(g.reflections().size());
  if (table.index.size() <= limits.codim1_scan_max_order) {
    std::size_t codim1 = 0;
    bool all_reflections = true;
    for (std::uint32_t id = 0; id < table.index.size(); ++id) {
      const Element w{std::string(table.index.at(id))};
      if (g.fixed_space_codim(w) != 1) continue;
      ++codim1;
      all_reflections = all_reflections && g.is_reflection(w);
    }
    s.reflections_are_codim1 = all_reflections && codim1 == g.reflections().size();
  }
  s.coxeter_order = g.element_order(g.coxeter());
  s.coxeter_length = g.reflection_length(g.coxeter());

  const NcPoset nc = build_nc(group);
  for (int k = 0; k <= nc.max_rank(); ++k) s.rank_sizes.push_back(std::to_string(nc.at_rank(k).size()));
  s.nc_size = std::to_string(nc.size());
  for (int p = 1; p <= p_max; ++p) s.multichains.push_back(dec(count_multichains(nc, p)));
  for (int k = 1; k <= n; ++k) s.fact_k.push_back(dec(count_fact_k(nc, k)));
  const BigInt red = count_fact_by_composition(nc, std::vector<int>(n, 1));
  s.red_dp = dec(red);

  std::vector<Factorization> reds;
  if (red <= limits.enumerate_red_max) {
    reds = enumerate_reduced_decompositions(nc);
    s.red_enumerated = std::to_string(reds.size());
  }

  std::map<ClassId, int> r_of_class;
  if (n >= 2) {
    const auto by_position = submaximal_by_position(nc);
    const auto rows = submaximal_by_class(nc);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const LLRow& row = rows[k];
      SummaryRow out;
      out.class_id = row.cls.id.short_hex();
      out.representative = to_hex(row.cls.representative.bytes());
      out.size_in_nc = row.cls.size_in_nc;
      out.r = row.r;
      out.order = row.element_order;
      out.u = dec(row.u);
      out.count = dec(row.count_submax);
      for (const auto& position : by_position) out.count_by_position.push_back(dec(position[k]));
      out.d1p = row.parabolic.d1;
      out.hp = row.parabolic.h;
      out.reducible = row.parabolic_reducible;
      s.rows.push_back(std::move(out));
      r_of_class.emplace(row.cls.id, row.r);
    }
  }

  if (n >= 2 && s.red_enumerated) {
    const auto fibers = concatenation_fibers(nc);
    FiberSummary f;
    BigInt total = 0;
    for (const auto& [target, size] : fibers) {
      total += size;
      const ClassId& cls = nc.class_of(nc.index_of(target.factors[0]));
      const auto it = r_of_class.find(cls);
      if (it == r_of_class.end() || static_cast<std::uint64_t>(it->second) != size) ++f.mismatched;
    }
    std::vector<int> composition(n - 1, 1);
    composition[0] = 2;
    f.fibers = std::to_string(fibers.size());
    f.targets_expected = dec(count_fact_by_composition(nc, composition));
    f.total = dec(total);
    s.fibers = std::move(f);
  }

  if (!reds.empty() && reds.size() <= limits.hurwitz_max_red) {
    s.hurwitz_orbit = std::to_string(hurwitz_orbit(g, reds.front(), reds.size()));
  }
  return s;
}

std::string summary_to_json(const EnumerationSummary& s) {
  ordered_json doc;
  doc["group"] = s.group;
  doc["p_max"] = s.p_max;
  doc["order"] = s.order;
  doc["reflections"] = s.reflections;
  doc["reflections_are_codim1"] =
      s.reflections_are_codim1 ? ordered_json(*s.reflections_are_codim1) : ordered_json(nullptr);
  doc["coxeter_order"] = s.coxeter_order;
  doc["coxeter_length"] = s.coxeter_length;
  doc["rank_sizes"] = s.rank_sizes;
  doc["nc_size"] = s.nc_size;
  doc["multichains"] = s.multichains;
  doc["fact_k"] = s.fact_k;
  doc["red_dp"] = s.red_dp;
  doc["red_enumerated"] = s.red_enumerated ? ordered_json(*s.red_enumerated) : ordered_json(nullptr);
  ordered_json rows = ordered_json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"class_id", r.class_id},
                    {"representative", r.representative},
                    {"size_in_nc", r.size_in_nc},
                    {"r", r.r},
                    {"order", r.order},
                    {"u", r.u},
                    {"count", r.count},
                    {"count_by_position", r.count_by_position},
                    {"d1p", r.d1p},
                    {"hp", r.hp},
                    {"reducible", r.reducible}});
  }
  doc["rows"] = std::move(rows);
  if (s.fibers) {
    doc["fibers"] = {{"fibers", s.fibers->fibers},
                     {"targets_expected", s.fibers->targets_expected},
                     {"total", s.fibers->total},
                     {"mismatched", s.fibers->mismatched}};
  } else {
    doc["fibers"] = nullptr;
  }
  doc["hurwitz_orbit"] = s.hurwitz_orbit ? ordered_json(*s.hurwitz_orbit) : ordered_json(nullptr);
  return doc.dump();
}

namespace {

EnumerationSummary summary_from(const ordered_json& doc) {
  EnumerationSummary s;
  s.group = doc.at("group").get<std::string>();
  s.p_max = doc.at("p_max").get<int>();
  s.order = doc.at("order").get<std::string>();
  s.reflections = doc.at("reflections").get<std::string>();
  if (!doc.at("reflections_are_codim1").is_null()) {
    s.reflections_are_codim1 = doc.at("reflections_are_codim1").get<bool>();
  }
  s.coxeter_order = doc.at("coxeter_order").get<int>();
  s.coxeter_length = doc.at("coxeter_length").get<int>();
  s.rank_sizes = doc.at("rank_sizes").get<std::vector<std::string>>();
  s.nc_size = doc.at("nc_size").get<std::string>();
  s.multichains = doc.at("multichains").get<std::vector<std::string>>();
  s.fact_k = doc.at("fact_k").get<std::vector<std::string>>();
  s.red_dp = doc.at("red_dp").get<std::string>();
  if (!doc.at("red_enumerated").is_null()) s.red_enumerated = doc.at("red_enumerated").get<std::string>();
  for (const auto& r : doc.at("rows")) {
    SummaryRow row;
    row.class_id = r.at("class_id").get<std::string>();
    row.representative = r.at("representative").get<std::string>();
    row.size_in_nc = r.at("size_in_nc").get<std::uint64_t>();
    row.r = r.at("r").get<int>();
    row.order = r.at("order").get<int>();
    row.u = r.at("u").get<std::string>();
    row.count = r.at("count").get<std::string>();
    row.count_by_position = r.at("count_by_position").get<std::vector<std::string>>();
    row.d1p = r.at("d1p").get<int>();
    row.hp = r.at("hp").get<int>();
    row.reducible = r.at("reducible").get<bool>();
    s.rows.push_back(std::move(row));
  }
  if (const auto& f = doc.at("fibers"); !f.is_null()) {
    s.fibers = FiberSummary{f.at("fibers").get<std::string>(), f.at("targets_expected").get<std::string>(),
                            f.at("total").get<std::string>(), f.at("mismatched").get<std::uint64_t>()};
  }
  if (!doc.at("hurwitz_orbit").is_null()) s.hurwitz_orbit = doc.at("hurwitz_orbit").get<std::string>();
  return s;
}

ordered_json read_cache_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return ordered_json::object();
  try {
    ordered_json doc = ordered_json::parse(in);
    if (doc.is_object()) return doc;
  } catch (const nlohmann::json::exception&) {
  }
  return ordered_json::object();
}

}  // namespace

EnumerationSummary summary_from_json(const std::string& text) {
  try {
    return summary_from(ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed summary: ") + e.what());
  }
}

SummaryCache::SummaryCache(std::string path) : path_(std::move(path)) {}

std::string SummaryCache::key_for(const std::string& group, int p_max) {
  return group + "@" + library_version() + "#p" + std::to_string(p_max);
}

std::optional<EnumerationSummary> SummaryCache::load(const std::string& key) const {
  const ordered_json doc = read_cache_file(path_);
  const auto it = doc.find(key);
  if (it == doc.end()) return std::nullopt;
  try {
    return summary_from(*it);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void SummaryCache::store(const std::string& key, const EnumerationSummary& summary) const {
  ordered_json doc = read_cache_file(path_);
  doc[key] = ordered_json::parse(summary_to_json(summary));
  const std::string tmp = path_ + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp);
    out << doc.dump(1) << "\n";
    if (!out) throw Error("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, path_);
}

std::vector<ReportRow> report_rows(const EnumerationSummary& s) {
  std::vector<ReportRow> rows;
  for (const auto& r : s.rows) rows.push_back({r.class_id, r.r, r.u, r.count, r.d1p, r.hp});
  return rows;
}

std::vector<ComparisonLine> compare_with_table(const GroupSpec& spec, const EnumerationSummary& s) {
  const ExpectedRow expected = expected_ll_data(spec);
  std::vector<std::pair<BigInt, BigInt>> want;
  for (const auto& e : expected.entries) want.emplace_back(e.p, e.u);
  std::vector<std::pair<BigInt, BigInt>> got;
  for (const auto& r : s.rows) got.emplace_back(BigInt(r.r), from_decimal(r.u));
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());

  std::vector<ComparisonLine> lines;
  auto text = [](const std::pair<BigInt, BigInt>& x) { return pair_text(dec(x.first), dec(x.second)); };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < want.size() || j < got.size()) {
    if (i < want.size() && j < got.size() && want[i] == got[j]) {
      lines.push_back({text(want[i]), text(got[j]), true});
      ++i;
      ++j;
    } else if (j == got.size() || (i < want.size() && want[i] < got[j])) {
      lines.push_back({text(want[i++]), "", false});
    } else {
      lines.push_back({"", text(got[j++]), false});
    }
  }
  return lines;
}

Report make_verify_report(const GroupSpec& spec, const EnumerationSummary& s) {
  const InvariantData data = invariant_data(spec);
  const int n = data.rank;
  const int h = data.coxeter_number();
  Report report;
  report.command = "verify";
  report.group = s.group;

  BigInt reflections_expected = 0;
  for (const int d : data.degrees) reflections_expected += d - 1;
  report.add_check("|W| = product of degrees", dec(data.order), s.order);
  report.add_check("#reflections = sum (d_i - 1)", dec(reflections_expected), s.reflections);
  if (s.reflections_are_codim1) {
    report.add_check("reflections = elements with codim Fix 1", "true",
                     *s.reflections_are_codim1 ? "true" : "false");
  }
  report.add_check("order of c = h", std::to_string(h), std::to_string(s.coxeter_order));
  report.add_check("l(c) = n", std::to_string(n), std::to_string(s.coxeter_length));

  report.add_check("|NC| = Cat(W)", dec(fuss_catalan(data, 1)), s.nc_size);
  for (int p = 1; p <= s.p_max; ++p) {
    report.add_check("multichains p=" + std::to_string(p) + " = Cat^(p)", dec(fuss_catalan(data, p)),
                     s.multichains[p - 1]);
  }

  const BigInt ll = ll_number(data);
  report.add_check("|Red(c)| = n! h^n / |W|", dec(ll), s.red_dp);
  if (s.red_enumerated) report.add_check("|Red(c)| by enumeration", s.red_dp, *s.red_enumerated);

  for (int p = 0; p <= s.p_max; ++p) {
    BigInt lhs = 0;
    for (int k = 1; k <= n; ++k) lhs += binomial(p + 1, k) * from_decimal(s.fact_k[k - 1]);
    report.add_check("sum_k C(p+1,k) |fact_k| at p=" + std::to_string(p), dec(chapoton_rhs(data, p)),
                     dec(lhs));
  }

  if (n >= 2) {
    BigInt total = 0;
    BigInt ru = 0;
    BigInt usum = 0;
    for (const auto& r : s.rows) {
      total += from_decimal(r.count);
      ru += BigInt(r.r) * from_decimal(r.u);
      usum += from_decimal(r.u);
    }
    report.add_check("sum of class counts = |fact_(n-1)|", s.fact_k[n - 2], dec(total));
    report.add_check("|fact_(n-1)| closed form", dec(submax_total_closed(data)), s.fact_k[n - 2]);
    report.add_check("sum r*u = n(n-1)h", dec(deg_discriminant(data)), dec(ru));
    report.add_check("sum u = deg D - deg J", dec(deg_discriminant(data) - deg_jacobian(data)), dec(usum));

    for (const auto& r : s.rows) {
      const std::string tag = "[" + r.class_id + "] ";
      if (spec.is_two_reflection_group()) {
        report.add_check(tag + "r = order of w", std::to_string(r.order), std::to_string(r.r));
      }
      const std::string ratio = r.d1p == 0 ? "undefined"
                                           : (2 * r.hp % r.d1p == 0 ? std::to_string(2 * r.hp / r.d1p)
                                                                    : std::to_string(2 * r.hp) + "/" +
                                                                          std::to_string(r.d1p));
      report.add_check(tag + "r = 2h'/d1'", ratio, std::to_string(r.r));
      const std::string parabolic_ll = r.reducible ? "2" : ratio;
      report.add_check(tag + "r = LL-number of parabolic", parabolic_ll, std::to_string(r.r));
      const bool symmetric = std::all_of(r.count_by_position.begin(), r.count_by_position.end(),
                                         [&](const std::string& c) { return c == r.count_by_position.front(); });
      std::string positions;
      for (const auto& c : r.count_by_position) positions += (positions.empty() ? "" : "/") + c;
      report.add_check(tag + "count equal at every position", "equal", positions, symmetric);
    }
  }

  if (s.fibers) {
    report.add_check("fibers: size = r of target class", "0 mismatches",
                     std::to_string(s.fibers->mismatched) + " mismatches");
    report.add_check("fibers: targets = |fact_(2,1,...,1)|", s.fibers->targets_expected, s.fibers->fibers);
    report.add_check("fibers: sum = |Red(c)|", s.red_dp, s.fibers->total);
  }
  if (s.hurwitz_orbit) report.add_check("Hurwitz orbit = Red(c)", s.red_dp, *s.hurwitz_orbit);

  try {
    report.comparison = compare_with_table(spec, s);
  } catch (const NoTableRow& e) {
    report.notes.push_back(e.what());
  }
  report.rows = report_rows(s);
  return report;
}

}  // namespace ncfact
