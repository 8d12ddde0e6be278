// orthoscope: command-line front end.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orthoscope/orthoscope.hpp"

#ifndef ORTHOSCOPE_FIXTURES
#define ORTHOSCOPE_FIXTURES "tests/fixtures/corpus.txt"
#endif

namespace {

enum Exit { ok = 0, failure = 1, parse_error = 2 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw orthoscope::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_fixtures_command(const std::string& path, bool json) {
  auto outcomes = orthoscope::run_fixtures(orthoscope::load_fixtures(path));
  int failed = 0;
  for (const auto& o : outcomes) {
    if (!o.passed) ++failed;
    if (json && o.report) {
      std::cout << orthoscope::emit_json(*o.report) << "\n";
    } else {
      std::cout << (o.passed ? "PASS " : "FAIL ") << o.name;
      if (!o.passed) std::cout << "  " << o.message;
      std::cout << "\n";
    }
  }
  std::cerr << outcomes.size() - failed << "/" << outcomes.size() << " fixtures passed\n";
  return failed == 0 ? ok : failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthoscope: exact orthogonality criteria for planar differential systems"};
  app.require_subcommand(1);

  bool json = false, witness = false;
  std::string input_file, expression, residue_class = "rational", with, hfun;

  for (const auto& name : orthoscope::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_flag("--json", json, "emit the machine-readable report");
    sub->add_flag("--witness", witness, "include residue tables and witness identities in text output");
    sub->add_option("--input", input_file, "read the system from a file");
    sub->add_option("expression", expression, "inline system or function");
    sub->add_option("--class", residue_class, "residue class for beta-log and is-dlog")
        ->check(CLI::IsMember({"integer", "rational"}));
    if (name == "bracket") sub->add_option("--with", with, "second vector field (default: y' = 1)");
    if (name == "dlog-sys") sub->add_option("--fn", hfun, "function h(x,y) (default: y)");
  }
  auto* fixtures = app.add_subcommand("fixtures", "run the regression corpus");
  auto* fixtures_run = fixtures->add_subcommand("run");
  std::string fixture_file = ORTHOSCOPE_FIXTURES;
  fixtures_run->add_option("--file", fixture_file, "corpus file");
  fixtures_run->add_flag("--json", json, "emit each fixture's report");
  fixtures->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixtures->parsed()) return run_fixtures_command(fixture_file, json);

    std::string command = app.get_subcommands().front()->get_name();
    std::string text = !input_file.empty() ? read_file(input_file) : expression;
    if (text.empty()) {
      std::cerr << "no input: pass an expression or --input FILE\n";
      return parse_error;
    }
    orthoscope::RunOptions opt;
    opt.residue_class = residue_class == "integer" ? orthoscope::ResidueClass::integer : orthoscope::ResidueClass::rational;
    if (!with.empty()) opt.with = with;
    if (!hfun.empty()) opt.h = hfun;

    orthoscope::SystemSource source = orthoscope::parse_system(text);
    orthoscope::Report rep = orthoscope::run(command, source, opt);
    std::cout << orthoscope::emit(rep, json ? orthoscope::Format::json : orthoscope::Format::text, witness || json)
              << (json ? "\n" : "");
    return ok;
  } catch (const std::exception& e) {
    std::cerr << orthoscope::error_label(e) << ": " << e.what() << "\n";
    return orthoscope::exit_code_for(e);
  }
}
