#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmr/semantics.hpp"
#include "nmr/syntax.hpp"

namespace nmr {

// prerequisite : justification_1, ..., justification_m / consequent
struct Default {
  Formula prerequisite = Formula::truth();
  std::vector<Formula> justifications;
  Formula consequent = Formula::truth();

  friend bool operator==(const Default&, const Default&) = default;
};

struct DefaultTheory {
  Vocabulary vocabulary;
  std::vector<Formula> facts;
  std::vector<Default> defaults;

  friend bool operator==(const DefaultTheory&, const DefaultTheory&) = default;
};

// Validates that every component is objective and, with an explicit
// vocabulary, that it covers every atom. Without one the atoms are taken in
// first-occurrence order (facts and defaults in input order).
DefaultTheory make_default_theory(std::vector<Formula> facts, std::vector<Default> defaults,
                                  std::optional<Vocabulary> vocabulary = std::nullopt);

// .dt text: `#` comments, optional `vocab:` header, fact lines, and default
// lines `PRE : J1, J2 / CONS` (PRE may be omitted, the list may be empty).
DefaultTheory parse_default_theory(std::string_view text);

std::string to_string(const Default& d);
std::string to_string(const DefaultTheory& dt);

// alpha : beta_1..beta_m / gamma  becomes  K alpha & ~K ~beta_1 & ... -> gamma.
// A `true` prerequisite drops K alpha; with nothing left the result is gamma.
Formula konolige(const Default& d);
Theory konolige(const DefaultTheory& dt);

// One application round of Reiter's operator with justifications checked
// against e: the least set closed under the facts and every default whose
// prerequisite is entailed and whose justifications are each consistent with e.
BeliefState reiter_gamma(const DefaultTheory& dt, const BeliefState& e);

// Reiter extensions computed directly by default-subset enumeration. Does not
// use the autoepistemic machinery. Sorted canonically.
std::vector<BeliefState> reiter_extensions(const DefaultTheory& dt, const Limits& limits = {});

enum class DlSemantics { kk, weak, reiter, wf };

std::string_view to_string(DlSemantics s);

// The corresponding semantics of the translated theory: weak = expansions,
// reiter = stable extensions.
SemanticsResult dl_semantics(const DefaultTheory& dt, DlSemantics kind, TruthFunction truth = TruthFunction::kleene,
                             const Limits& limits = {});

struct AlignmentReport {
  std::vector<BeliefState> reiter;
  std::vector<BeliefState> stable;
  bool aligned = false;
  SemanticsResult kk;
  SemanticsResult wf;
  SemanticsResult weak;
};

AlignmentReport align_check(const DefaultTheory& dt, const Limits& limits = {});

}  // namespace nmr
