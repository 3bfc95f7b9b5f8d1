#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "nmr/truth.hpp"
#include "nmr/worlds.hpp"

namespace nmr::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageOrParse = 1,
  kResourceCap = 2,
  kInternal = 3,
  kDisagreement = 4,
};

enum class Logic { ael, dl };

// .dt means default logic, anything else autoepistemic.
Logic infer_logic(const std::string& path);

struct SolveRequest {
  std::optional<Logic> logic;  // inferred from the input extension when absent
  std::string semantics = "wf";  // kk, expansion, stable, wf, reiter, weak
  TruthFunction truth = TruthFunction::kleene;
  std::string input;
  bool json = false;
  bool trace = false;
  std::size_t max_atoms = kDefaultMaxAtoms;
};

int run_solve(const SolveRequest& req, std::ostream& out, std::ostream& err);

// Prints the Konolige translation of a .dt file as .ael text.
int run_translate(const std::string& input, std::ostream& out, std::ostream& err);

struct CheckRequest {
  std::optional<Logic> logic;
  TruthFunction truth = TruthFunction::kleene;
  std::string input;
  std::size_t max_atoms = kDefaultMaxAtoms;
  std::size_t oracle_atoms = 4;
  bool inject_fault = false;
};

// Compares the solver against the brute-force oracle (and, for default
// theories, the direct Reiter procedure against stable extensions of the
// translation). Exit 4 with a minimized counterexample on disagreement.
int run_check(const CheckRequest& req, std::ostream& out, std::ostream& err);

}  // namespace nmr::cli
