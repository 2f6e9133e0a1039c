// hopfdual: catalog listing, suite runs, instance files and reports.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfdual/instance_io.hpp"

using namespace hopfdual;

namespace {

struct Output {
  std::string format = "text";
  bool canonical = false;
  std::string out;  // empty: stdout

  void add_to(CLI::App* app, bool format_required = false) {
    auto* f = app->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (format_required) f->required();
    app->add_flag("--canonical", canonical, "omit timings for byte-identical output");
    app->add_option("--out", out, "write the report here instead of stdout");
  }

  int emit(const std::vector<SuiteRun>& runs) const {
    ReportOptions opt{canonical};
    std::string text = format == "json" ? render_json(runs, opt) : render_text(runs, opt);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out);
      if (!f) fail(ErrorKind::ParseError, out + ": cannot write report");
      f << text;
    }
    return all_passed(runs) ? 0 : 1;
  }
};

int list_catalog(const std::string& format) {
  std::vector<EntrySummary> entries = list_entries();
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries)
      j.push_back({{"name", e.name}, {"kind", e.kind}, {"ring", e.ring}, {"rank", e.hopf_rank}, {"description", e.description}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : entries)
    std::cout << e.name << "\t" << e.kind << "\t" << e.ring << "\trank " << e.hopf_rank << "\t" << e.description << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of smash and crossed product duality on finite-rank Hopf algebras"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "built-in instances");
  catalog->require_subcommand(1);

  std::string list_format = "text";
  auto* list = catalog->add_subcommand("list", "list catalog entries");
  list->add_option("--format", list_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string run_name, run_suite_name = "all";
  Output run_out;
  auto* run = catalog->add_subcommand("run", "run a suite on one catalog entry");
  run->add_option("name", run_name, "entry name")->required();
  run->add_option("--suite", run_suite_name, "hopf, crossed, smash, duality, cleft, opposite or all");
  run_out.add_to(run);

  std::string export_name, export_path, export_suite = "all";
  auto* exp = catalog->add_subcommand("export", "write a catalog entry as an instance file");
  exp->add_option("name", export_name, "entry name")->required();
  exp->add_option("path", export_path, "output file")->required();
  exp->add_option("--suite", export_suite, "suite recorded in the file");

  std::string verify_path, verify_suite;
  Output verify_out;
  auto* verify = app.add_subcommand("verify", "run a suite on an instance file");
  verify->add_option("path", verify_path, "instance file")->required();
  verify->add_option("--suite", verify_suite, "overrides the suite named in the file");
  verify_out.add_to(verify);

  std::string report_suite = "all";
  std::vector<std::string> report_entries, report_instances;
  std::size_t jobs = 1;
  Output report_out;
  auto* report = app.add_subcommand("report", "run suites over the catalog (or chosen entries/files) and write a report");
  report->add_option("--suite", report_suite, "suite to run on every entry");
  report->add_option("--entry", report_entries, "catalog entries (default: all)");
  report->add_option("--instance", report_instances, "instance files to include");
  report->add_option("--jobs", jobs, "entries run concurrently")->check(CLI::PositiveNumber);
  report_out.add_to(report, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) return list_catalog(list_format);
    if (run->parsed()) return run_out.emit({run_suite(get_entry(run_name), parse_suite(run_suite_name))});
    if (exp->parsed()) {
      write_instance(get_entry(export_name), export_path, parse_suite(export_suite));
      return 0;
    }
    if (verify->parsed()) {
      InstanceFile f = parse_instance(verify_path);
      Suite s = verify_suite.empty() ? f.suite : parse_suite(verify_suite);
      return verify_out.emit({run_suite(f.entry, s)});
    }
    if (report->parsed()) {
      Suite s = parse_suite(report_suite);
      std::vector<CatalogEntry> entries;
      if (report_entries.empty() && report_instances.empty()) report_entries = entry_names();
      for (const auto& n : report_entries) entries.push_back(get_entry(n));
      for (const auto& p : report_instances) entries.push_back(parse_instance(p).entry);
      return report_out.emit(run_suites(entries, s, jobs));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
