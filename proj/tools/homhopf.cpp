#include "homhopf/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace homhopf;

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify Hom-Hopf algebras over Q"};
  cli::Options opts;
  std::string input;
  std::string format = "text";
  bool no_order = false;
  app.add_option("command", opts.command, "verify-hopf | build-uea | matched-pair-check | doublecross | bicross | "
                                          "semidualize | hom-lie-hopf")
      ->required()
      ->check(CLI::IsMember({"verify-hopf", "build-uea", "matched-pair-check", "doublecross", "bicross", "semidualize",
                             "hom-lie-hopf"}));
  app.add_option("--input", input, "input JSON document")->required();
  app.add_option("--degree", opts.degree, "truncation degree N")->check(CLI::PositiveNumber);
  app.add_option("--weight-bound", opts.weight_bound, "per-leaf weight bound W")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-order-constraint", no_order, "skip the order constraints of semidualization");
  app.add_flag("--timing", opts.timing, "include wall-clock time in the report");
  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }
  opts.order_constraint = !no_order;

  cli::RunReport report;
  try {
    cli::InputDocument const doc = cli::parse_input_file(input);
    report = cli::run(doc, opts);
  } catch (cli::SchemaError const& e) {
    report.command = opts.command;
    report.error = cli::ErrorInfo{"SchemaError", e.detail(), e.pointer()};
    report.input_error = true;
  } catch (Error const& e) {
    report.command = opts.command;
    report.error = cli::ErrorInfo{errc_name(e.code()), e.what(), ""};
    report.input_error = true;
  } catch (nlohmann::json::exception const& e) {
    report.command = opts.command;
    report.error = cli::ErrorInfo{"SchemaError", e.what(), ""};
    report.input_error = true;
  }
  if (format == "json") std::cout << cli::report_to_json(report).dump(2) << '\n';
  else std::cout << cli::report_to_text(report);
  return report.exit_code();
}
