#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nmr/syntax.hpp"
#include "nmr/truth_value.hpp"
#include "nmr/worlds.hpp"

namespace nmr {

enum class TruthFunction { kleene, supervaluation };

std::string_view to_string(TruthFunction t);

inline constexpr std::size_t kDefaultMaxCompletions = 20;

// A list of formulas flattened into an index-based DAG over a fixed
// vocabulary. Every `knows` node refers to a slot: the position of its
// argument in collect_modal_subformulas(), so slot values can be computed
// innermost-first and shared across all occurrences.
class CompiledTheory {
 public:
  CompiledTheory() = default;
  // Throws VocabularyMismatch if a formula mentions an atom outside `v`.
  CompiledTheory(const Vocabulary& v, std::span<const Formula> formulas);

  std::size_t atom_count() const { return atoms_; }
  std::size_t formula_count() const { return roots_.size(); }
  std::size_t modal_count() const { return slot_args_.size(); }
  const std::vector<Formula>& modal_subformulas() const { return modal_; }

  // Values of K(phi_i) in the total state b.
  std::vector<std::uint8_t> s5_modal_values(const BeliefState& b) const;
  // Kleene values of K(phi_i) in the partial state. With `fault` set every
  // value is negated (fault injection for `check`).
  std::vector<TruthValue> kleene_modal_values(const PartialBeliefState& pb, bool fault = false) const;

  // Theory value at w for given slot values.
  bool holds(World w, std::span<const std::uint8_t> modal) const;
  TruthValue value(World w, std::span<const TruthValue> modal) const;
  bool formula_holds(std::size_t index, World w, std::span<const std::uint8_t> modal) const;
  TruthValue formula_value(std::size_t index, World w, std::span<const TruthValue> modal) const;

  // Worlds where every formula holds, given slot values.
  BeliefState models(std::span<const std::uint8_t> modal) const;

 private:
  struct Node {
    Connective kind;
    std::uint32_t payload;  // atom index or modal slot
    std::int32_t lhs;
    std::int32_t rhs;
  };

  std::int32_t compile(const Formula& f, const Vocabulary& v);
  bool eval_bool(std::int32_t n, World w, std::span<const std::uint8_t> modal) const;
  TruthValue eval_3(std::int32_t n, World w, std::span<const TruthValue> modal) const;

  std::size_t atoms_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::int32_t> roots_;
  std::vector<std::int32_t> slot_args_;
  std::vector<Formula> modal_;
};

// Two-valued S5 evaluation: K phi holds iff phi holds in every world of b.
bool eval_s5(const Vocabulary& v, const BeliefState& b, World w, const Formula& f);
// Every world of b satisfies f.
bool entails(const Vocabulary& v, const BeliefState& b, const Formula& f);
// Worlds of the full set satisfying an objective theory.
BeliefState models(const Vocabulary& v, std::span<const Formula> objective_formulas);

TruthValue eval_kleene(const Vocabulary& v, const PartialBeliefState& pb, World w, const Formula& f);
TruthValue eval_kleene_theory(const Vocabulary& v, const PartialBeliefState& pb, World w,
                              std::span<const Formula> theory);

// Case analysis over every total b with cp <= b <= pp. Throws
// ResourceCapError when |pp \ cp| exceeds max_completions.
TruthValue eval_sv(const Vocabulary& v, const PartialBeliefState& pb, World w, std::span<const Formula> theory,
                   std::size_t max_completions = kDefaultMaxCompletions);
TruthValue eval_sv(const Vocabulary& v, const PartialBeliefState& pb, World w, const Formula& f,
                   std::size_t max_completions = kDefaultMaxCompletions);

struct EvalOptions {
  TruthFunction truth = TruthFunction::kleene;
  std::size_t max_completions = kDefaultMaxCompletions;
  bool fault = false;
};

// Partition of all worlds by the theory's three-valued value in pb:
// pp' = worlds valued t or u, cp' = worlds valued t.
PartialBeliefState evaluate_all(const CompiledTheory& theory, const PartialBeliefState& pb, const EvalOptions& opts);

}  // namespace nmr
