#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "nmr/cli.hpp"

namespace {

const std::map<std::string, nmr::cli::Logic> kLogics{{"ael", nmr::cli::Logic::ael}, {"dl", nmr::cli::Logic::dl}};
const std::map<std::string, nmr::TruthFunction> kTruths{{"kleene", nmr::TruthFunction::kleene},
                                                        {"sv", nmr::TruthFunction::supervaluation}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonmonotonic reasoning solver for autoepistemic and default logic"};
  app.require_subcommand(1);

  nmr::cli::SolveRequest solve;
  nmr::cli::CheckRequest check;
  std::string translate_input;
  std::string solve_logic, solve_truth = "kleene", check_logic, check_truth = "kleene";

  auto* solve_cmd = app.add_subcommand("solve", "Compute the results of one semantics");
  solve_cmd->add_option("--logic", solve_logic, "ael or dl (default: from the file extension)")
      ->check(CLI::IsMember(kLogics));
  solve_cmd->add_option("--semantics", solve.semantics, "kk, expansion, stable, wf, reiter or weak")
      ->check(CLI::IsMember({"kk", "expansion", "stable", "wf", "reiter", "weak"}));
  solve_cmd->add_option("--truth", solve_truth, "kleene or sv")->check(CLI::IsMember(kTruths));
  solve_cmd->add_option("--input,input", solve.input, "Theory file (.ael or .dt)")->required();
  solve_cmd->add_flag("--json", solve.json, "Emit JSON");
  solve_cmd->add_flag("--trace", solve.trace, "Include derivation traces");
  solve_cmd->add_option("--max-atoms", solve.max_atoms, "Vocabulary size cap");

  auto* translate_cmd = app.add_subcommand("translate", "Print the Konolige translation of a default theory");
  translate_cmd->add_option("--input,input", translate_input, "Default theory (.dt)")->required();

  auto* check_cmd = app.add_subcommand("check", "Cross-check the solver against reference procedures");
  check_cmd->add_option("--logic", check_logic, "ael or dl (default: from the file extension)")
      ->check(CLI::IsMember(kLogics));
  check_cmd->add_option("--truth", check_truth, "kleene or sv")->check(CLI::IsMember(kTruths));
  check_cmd->add_option("--input,input", check.input, "Theory file (.ael or .dt)")->required();
  check_cmd->add_option("--max-atoms", check.max_atoms, "Vocabulary size cap");
  check_cmd->add_flag("--inject-fault", check.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nmr::cli::kUsageOrParse;
  }

  if (!solve_logic.empty()) solve.logic = kLogics.at(solve_logic);
  if (!check_logic.empty()) check.logic = kLogics.at(check_logic);
  solve.truth = kTruths.at(solve_truth);
  check.truth = kTruths.at(check_truth);

  if (*solve_cmd) return nmr::cli::run_solve(solve, std::cout, std::cerr);
  if (*translate_cmd) return nmr::cli::run_translate(translate_input, std::cout, std::cerr);
  return nmr::cli::run_check(check, std::cout, std::cerr);
}
