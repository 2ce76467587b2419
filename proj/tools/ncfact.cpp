#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "ncfact/closedform.hpp"
#include "ncfact/commands.hpp"
#include "ncfact/errors.hpp"
#include "ncfact/report.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts block factorizations of Coxeter elements in well-generated reflection groups"};
  app.set_version_flag("--version", ncfact::library_version());
  app.require_subcommand(1);

  ncfact::CommandOptions options;
  std::string format = "md";
  std::uint64_t budget = options.budget.max_order;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"md", "json", "csv"}));
    sub->add_option("--budget", budget, "Largest |W| that may be enumerated");
    sub->add_flag("--allow-e7", options.budget.allow_e7, "Permit enumerating E7");
    sub->add_flag("--timings", options.timings, "Record wall-clock seconds in the report");
  };

  std::string group;
  auto* info = app.add_subcommand("info", "Degrees, order and closed-form counts of a group");
  info->add_option("group", group, "Group string, e.g. A3, B4, I2(5), G(3,1,3), H4")->required();
  info->add_option("--format", format, "Output format")->check(CLI::IsMember({"md", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run the full identity suite on a group");
  verify->add_option("group", group, "Group string")->required();
  verify->add_option("--p-max", options.p_max, "Largest p for multichain and binomial checks")
      ->check(CLI::Range(0, 20));
  std::string cache_path;
  bool no_cache = false;
  verify->add_option("--cache", cache_path, "JSON file holding cached enumeration results");
  verify->add_flag("--no-cache", no_cache, "Ignore the cache file");
  add_common(verify);

  std::string kind;
  std::string argument;
  auto* count = app.add_subcommand("count", "Count factorizations");
  count->add_option("group", group, "Group string")->required();
  count->add_option("kind", kind, "red | fact-k | composition | by-class")
      ->required()
      ->check(CLI::IsMember({"red", "fact-k", "composition", "by-class"}));
  count->add_option("arg", argument, "k for fact-k, e.g. 2,1,1 for composition");
  count->add_option("--composition", argument, "Composition such as 2,1,1");
  add_common(count);

  std::string target;
  auto* table = app.add_subcommand("table", "Compare enumerated strata with the discriminant table");
  table->add_option("target", target, "Group string or row label such as B_n or G(e,e,4)")->required();
  table->add_option("--cache", cache_path, "JSON file holding cached enumeration results");
  add_common(table);

  std::string output;
  auto* export_table = app.add_subcommand("export-table", "Write the discriminant table as JSON");
  export_table->add_option("-o,--output", output, "Destination file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  options.budget.max_order = budget;
  if (!cache_path.empty()) options.cache_path = cache_path;
  options.use_cache = !no_cache;

  try {
    if (*export_table) {
      const std::string json = ncfact::export_table_json();
      if (output.empty()) {
        std::cout << json;
      } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot open " + output);
        out << json;
      }
      return kPass;
    }

    const ncfact::OutputFormat fmt = ncfact::parse_format(format);
    ncfact::Report report;
    if (*info) {
      report = ncfact::cmd_info(group);
    } else if (*verify) {
      report = ncfact::cmd_verify(group, options);
    } else if (*count) {
      const auto k = ncfact::parse_count_kind(kind);
      if ((k == ncfact::CountKind::FactK || k == ncfact::CountKind::Composition) && argument.empty()) {
        std::cerr << "error: count " << kind << " needs an argument\n";
        return kUsage;
      }
      report = ncfact::cmd_count(group, k, argument, options);
    } else if (*table) {
      report = ncfact::cmd_table(target, options);
    }
    std::cout << ncfact::render(report, fmt);
    return report.pass() ? kPass : kCheckFailed;
  } catch (const ncfact::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ncfact::NonIntegerResult& e) {
    std::cerr << "non-integer result: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const ncfact::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ncfact::UnsupportedGroup& e) {
    std::cerr << "unsupported group: " << e.what() << "\n";
    return kUsage;
  } catch (const ncfact::RankTooSmall& e) {
    std::cerr << "rank too small: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
