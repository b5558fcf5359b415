#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "starbundle/compute.hpp"
#include "starbundle/verification.hpp"

namespace {

using starbundle::Json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file)
    throw starbundle::UsageError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::map<std::string, double> parse_tolerance_overrides(
    const std::vector<std::string>& raw) {
  std::map<std::string, double> out;
  for (const auto& item : raw) {
    const auto split = item.find('=');
    if (split == std::string::npos || split == 0)
      throw starbundle::UsageError("--tol expects key=value, got: " + item);
    try {
      out[item.substr(0, split)] = std::stod(item.substr(split + 1));
    } catch (const std::exception&) {
      throw starbundle::UsageError("--tol value is not a number in: " + item);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star groups, prolonged representations, and prolonged homogeneous bundles"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "run a property suite against a catalog example");
  std::string example;
  std::string suite = "all";
  int samples = 200;
  std::uint64_t seed = 0;
  std::vector<std::string> tol_raw;
  std::string report_format = "json";
  bool paper_variant = false;
  bool corrupt_rep = false;
  verify->add_option("--example", example, "catalog example name")->required();
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--samples", samples, "samples per check family")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--tol", tol_raw, "threshold override key=value");
  verify->add_option("--report", report_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--paper-variant", paper_variant,
                   "also evaluate the component-formula variant of the inverse action");
  verify->add_flag("--corrupt-rep", corrupt_rep,
                   "negative control: scale sigma by 2 (must fail)");

  // compute
  auto* compute = app.add_subcommand(
      "compute", "evaluate one operation on a JSON document");
  std::string op;
  std::string input_path = "-";
  compute->add_option("--op", op, "operation name")->required();
  compute->add_option("--input", input_path, "input file or '-' for stdin");

  // list-examples
  auto* list = app.add_subcommand("list-examples", "print the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      starbundle::VerifyOptions options;
      options.samples = samples;
      options.seed = seed;
      options.tolerance_overrides = parse_tolerance_overrides(tol_raw);
      options.paper_variant = paper_variant;
      options.corrupt_rep = corrupt_rep;
      const auto report = starbundle::run_suite(example, suite, options);
      if (report_format == "json")
        std::cout << starbundle::report_to_json(report).dump(2) << "\n";
      else
        std::cout << starbundle::report_to_text(report);
      return report.overall ? 0 : 1;
    }
    if (compute->parsed()) {
      const std::string raw = read_input(input_path);
      std::cout << starbundle::compute_op(op, raw).dump(2) << "\n";
      return 0;
    }
    if (list->parsed()) {
      std::cout << starbundle::list_examples().dump(2) << "\n";
      return 0;
    }
  } catch (const starbundle::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const starbundle::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const starbundle::Error& e) {
    std::cout << Json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 2;
}
