#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "nmr/syntax.hpp"
#include "nmr/truth.hpp"
#include "nmr/worlds.hpp"

namespace nmr {

struct Limits {
  std::size_t max_atoms = kDefaultMaxAtoms;
  // Distinct modal subformulas for guess enumeration.
  std::size_t max_modal = 20;
  // Unknown worlds for supervaluation case analysis.
  std::size_t max_completions = kDefaultMaxCompletions;
  // Defaults for subset enumeration in the direct Reiter procedure.
  std::size_t max_defaults = 20;
};

// A theory compiled against its vocabulary together with the truth function
// used for partial states.
class OperatorContext {
 public:
  // Throws ResourceCapError if the vocabulary exceeds limits.max_atoms.
  explicit OperatorContext(Theory theory, TruthFunction truth = TruthFunction::kleene, Limits limits = {});

  const Theory& theory() const { return theory_; }
  const Vocabulary& vocabulary() const { return theory_.vocabulary; }
  std::size_t atom_count() const { return theory_.vocabulary.size(); }
  TruthFunction truth() const { return truth_; }
  const Limits& limits() const { return limits_; }
  const CompiledTheory& compiled() const { return compiled_; }
  EvalOptions eval_options() const { return {truth_, limits_.max_completions, fault_}; }

  OperatorContext with_truth(TruthFunction truth) const;

  // Deliberately corrupts Kleene evaluation of K. Only used to exercise the
  // disagreement path of `nmr check`.
  void inject_fault(bool on) { fault_ = on; }
  bool fault_injected() const { return fault_; }

 private:
  Theory theory_;
  TruthFunction truth_;
  Limits limits_;
  CompiledTheory compiled_;
  bool fault_ = false;
};

// D_T(b) = { w : b, w |= T }.
BeliefState moore_step(const OperatorContext& ctx, const BeliefState& b);

// Three-valued image of pb: pp' = worlds where T is not f, cp' = worlds where T is t.
PartialBeliefState approx_step(const OperatorContext& ctx, const PartialBeliefState& pb);

// Least precision fixpoint of approx_step, iterated from bottom. When `chain`
// is given it receives every state of the iteration, bottom first.
PartialBeliefState kk_lfp(const OperatorContext& ctx, std::vector<PartialBeliefState>* chain = nullptr);

struct NotStableSignal {
  friend bool operator==(NotStableSignal, NotStableSignal) { return true; }
};

using StableRevision = std::variant<BeliefState, NotStableSignal>;

// Stable derivation with cp pinned to b: starting from all worlds, repeatedly
// drop every world where T is f. Signals NotStable as soon as a world of b
// would be dropped. `removed` receives the worlds dropped in each round.
StableRevision stable_revision(const OperatorContext& ctx, const BeliefState& b,
                               std::vector<BeliefState>* removed = nullptr);

// Knowledge-least fixpoint of D_T by iteration from W. Requires a theory with
// only negative K occurrences; throws PreconditionError otherwise.
BeliefState klfp_moore(const OperatorContext& ctx);

}  // namespace nmr
