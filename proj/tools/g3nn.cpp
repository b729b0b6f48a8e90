// Command-line front end. Run `g3nn --help` for the subcommands.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "g3nn/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace g3nn;

  CLI::App app{"Decision procedure for G3 calculi of non-normal modal and deontic logics"};
  app.require_subcommand(1);

  std::string logic, format_name = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
  };

  std::string sequent;
  auto* decide = app.add_subcommand("decide", "Decide a sequent such as \"[]p, []q => [](p & q)\"");
  decide->add_option("--logic", logic, "Calculus, e.g. G3E, G3KD, G3EDbot")->required();
  decide->add_option("sequent", sequent)->required();
  add_format(decide);

  std::string a, b;
  auto* interpolate = app.add_subcommand("interpolate", "Craig interpolant of A -> B");
  interpolate->add_option("--logic", logic)->required();
  interpolate->add_option("A", a)->required();
  interpolate->add_option("B", b)->required();
  add_format(interpolate);

  auto* axioms = app.add_subcommand("axioms", "Derive the axioms of a calculus' logic");
  std::string positional_logic;
  axioms->add_option("calculus", positional_logic);
  axioms->add_option("--logic", logic);
  add_format(axioms);

  cli::MetaOptions meta_options;
  auto* meta = app.add_subcommand("meta", "Random tests of weakening, contraction, cut and invertibility");
  meta->add_option("--logic", meta_options.logic, "Calculus (default: all)");
  meta->add_option("--samples", meta_options.samples, "Samples per property")->capture_default_str();
  meta->add_option("--seed", meta_options.config.seed)->capture_default_str();
  meta->add_option("--max-weight", meta_options.config.max_weight)->capture_default_str();
  meta->add_option("--max-depth", meta_options.config.max_modal_depth, "Maximal modal depth")->capture_default_str();
  add_format(meta);

  std::string path = "-";
  auto* check = app.add_subcommand("check", "Re-verify a JSON derivation (file or - for stdin)");
  check->add_option("--logic", logic, "Overrides the calculus recorded in the document");
  check->add_option("file", path)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto format = format_from_name(format_name);
  if (*decide) return cli::cmd_decide(logic, sequent, format, std::cout, std::cerr);
  if (*interpolate) return cli::cmd_interpolate(logic, a, b, format, std::cout, std::cerr);
  if (*axioms) {
    if (logic.empty()) logic = positional_logic;
    if (logic.empty()) {
      std::cerr << "error: axioms needs a calculus\n";
      return 2;
    }
    return cli::cmd_axioms(logic, format, std::cout, std::cerr);
  }
  if (*meta) return cli::cmd_meta(meta_options, format, std::cout, std::cerr);
  std::string document;
  try {
    document = read_input(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return cli::cmd_check(logic, document, std::cout, std::cerr);
}
