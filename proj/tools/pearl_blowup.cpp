// pearl-blowup: quantum and Floer homology of monotone Lagrangians before and
// after a monotone one-point blow-up.
//
//   pearl-blowup <command> (--example NAME | --input FILE) [--json] [--verbose]
//
// Exit codes: 0 success, 1 validation failure or refused computation,
// 2 parse error.

#include "lagblow/error.hpp"
#include "lagblow/workbench/report.hpp"
#include "lagblow/workbench/workspace.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using lagblow::Error;
using lagblow::ErrorKind;
namespace wb = lagblow::workbench;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownExample:
      return 2;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian quantum/Floer homology under monotone one-point blow-up"};
  app.set_version_flag("--version", "pearl-blowup 1.0");

  std::string command;
  std::string example;
  std::string input;
  bool json = false;
  bool verbose = false;

  app.add_option("command", command, "check | qh | blowup | hf | hf-blowup")
      ->required()
      ->check(CLI::IsMember({"check", "qh", "blowup", "hf", "hf-blowup"}));
  auto* example_opt = app.add_option("--example", example, "built-in fixture")
                          ->check(CLI::IsMember(wb::builtin_example_names()));
  auto* input_opt = app.add_option("--input", input, "input JSON document");
  example_opt->excludes(input_opt);
  app.add_flag("--json", json, "emit the report as JSON");
  app.add_flag("--verbose", verbose, "include differential matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (example.empty() == input.empty()) {
    std::cerr << "error: exactly one of --example or --input is required\n";
    return 2;
  }

  try {
    const auto cmd = wb::parse_command(command);
    const wb::Workspace workspace =
        example.empty() ? wb::parse_spec(read_file(input)) : wb::builtin_example(example);
    const std::string source = example.empty() ? "input " + input : "example " + example;
    const auto report = wb::run_report(workspace, cmd, source);
    std::cout << (json ? wb::render_json(report, verbose) : wb::render_text(report, verbose));
    return report.refused() ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& d : e.diagnostics()) std::cerr << "  " << d << "\n";
    return exit_code_for(e.kind());
  }
}
