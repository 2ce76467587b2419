#include "ncfact/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ncfact/errors.hpp"

#ifndef NCFACT_VERSION
#define NCFACT_VERSION "0.0.0"
#endif

namespace ncfact {

std::string library_version() { return NCFACT_VERSION; }

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }) &&
         std::all_of(comparison.begin(), comparison.end(),
                     [](const ComparisonLine& c) { return c.match; });
}

void Report::add_check(std::string name, std::string expected, std::string actual) {
  const bool ok = expected == actual;
  checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

void Report::add_check(std::string name, std::string expected, std::string actual, bool pass) {
  checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

OutputFormat parse_format(const std::string& text) {
  if (text == "md" || text == "markdown") return OutputFormat::Markdown;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw ParseError("unknown output format '" + text + "' (md, json, csv)");
}

std::string to_json(const Report& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["command"] = report.command;
  doc["group"] = report.group;
  doc["pass"] = report.pass();
  if (!report.values.empty()) {
    ordered_json values = ordered_json::object();
    for (const auto& [k, v] : report.values) values[k] = v;
    doc["values"] = std::move(values);
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  doc["checks"] = std::move(checks);
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"class_id", r.class_id},
                    {"r", std::to_string(r.r)},
                    {"u", r.u},
                    {"count", r.count},
                    {"d1p", std::to_string(r.d1p)},
                    {"hp", std::to_string(r.hp)}});
  }
  doc["rows"] = std::move(rows);
  if (!report.comparison.empty()) {
    ordered_json cmp = ordered_json::array();
    for (const auto& c : report.comparison) {
      cmp.push_back({{"expected", c.expected}, {"enumerated", c.enumerated}, {"match", c.match}});
    }
    doc["comparison"] = std::move(cmp);
  }
  if (!report.notes.empty()) doc["notes"] = report.notes;
  ordered_json meta;
  meta["version"] = library_version();
  meta["budget"] = std::to_string(report.budget);
  if (report.seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *report.seconds);
    meta["seconds"] = buf;
  } else {
    meta["seconds"] = nullptr;
  }
  doc["meta"] = std::move(meta);
  return doc.dump(2) + "\n";
}

namespace {
std::string cell(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string to_markdown(const Report& report) {
  std::ostringstream out;
  out << "# " << report.command << " " << report.group << "\n\n";
  if (!report.values.empty()) {
    out << "| quantity | value |\n|---|---|\n";
    for (const auto& [k, v] : report.values) out << "| " << cell(k) << " | " << cell(v) << " |\n";
    out << "\n";
  }
  if (!report.checks.empty()) {
    out << "| check | expected | actual | pass |\n|---|---|---|---|\n";
    for (const auto& c : report.checks) {
      out << "| " << cell(c.name) << " | " << cell(c.expected) << " | " << cell(c.actual) << " | "
          << (c.pass ? "yes" : "**NO**") << " |\n";
    }
    out << "\n";
  }
  if (!report.rows.empty()) {
    out << "| class | r | u | count | d1' | h' |\n|---|---|---|---|---|---|\n";
    for (const auto& r : report.rows) {
      out << "| " << r.class_id << " | " << r.r << " | " << r.u << " | " << r.count << " | "
          << r.d1p << " | " << r.hp << " |\n";
    }
    out << "\n";
  }
  if (!report.comparison.empty()) {
    out << "| expected (p,u) | enumerated (r,u) | |\n|---|---|---|\n";
    for (const auto& c : report.comparison) {
      out << "| " << c.expected << " | " << c.enumerated << " | "
          << (c.match ? "" : "**MISMATCH**") << " |\n";
    }
    out << "\n";
  }
  for (const auto& note : report.notes) out << "> " << note << "\n";
  if (!report.notes.empty()) out << "\n";
  if (!report.checks.empty() || !report.comparison.empty()) {
    out << "overall: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  }
  return out.str();
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream out;
  if (!report.values.empty()) {
    out << "quantity,value\n";
    for (const auto& [k, v] : report.values) out << csv_field(k) << "," << csv_field(v) << "\n";
  }
  if (!report.checks.empty()) {
    if (out.tellp() > 0) out << "\n";
    out << "name,expected,actual,pass\n";
    for (const auto& c : report.checks) {
      out << csv_field(c.name) << "," << csv_field(c.expected) << "," << csv_field(c.actual) << ","
          << (c.pass ? "true" : "false") << "\n";
    }
  }
  if (!report.rows.empty()) {
    if (out.tellp() > 0) out << "\n";
    out << "class_id,r,u,count,d1p,hp\n";
    for (const auto& r : report.rows) {
      out << r.class_id << "," << r.r << "," << r.u << "," << r.count << "," << r.d1p << ","
          << r.hp << "\n";
    }
  }
  if (!report.comparison.empty()) {
    if (out.tellp() > 0) out << "\n";
    out << "expected,enumerated,match\n";
    for (const auto& c : report.comparison) {
      out << csv_field(c.expected) << "," << csv_field(c.enumerated) << ","
          << (c.match ? "true" : "false") << "\n";
    }
  }
  return out.str();
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(report);
    case OutputFormat::Csv: return to_csv(report);
    case OutputFormat::Markdown: break;
  }
  return to_markdown(report);
}

}  // namespace ncfact
