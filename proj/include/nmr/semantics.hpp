#pragma once

#include <string_view>
#include <vector>

#include "nmr/operators.hpp"
#include "nmr/worlds.hpp"

namespace nmr {

enum class SemanticsKind { kripke_kleene, expansion, stable, well_founded };

std::string_view to_string(SemanticsKind k);

enum class StepKind { kk, mi, stable_removal };

std::string_view to_string(StepKind k);

// One inference step: some unknown worlds become certainly possible, some
// become certainly impossible.
struct TraceStep {
  StepKind kind;
  WorldSet made_possible;
  WorldSet made_impossible;
  PartialBeliefState state;  // after the step
};

struct DerivationTrace {
  PartialBeliefState initial;
  std::vector<TraceStep> steps;

  // Re-applies every step to `initial`. Throws InternalError if a step does
  // not reproduce its recorded state or touches an already-decided world.
  PartialBeliefState replay() const;
};

struct SemanticsResult {
  SemanticsKind kind;
  TruthFunction truth;
  // kk / wf: exactly one state. expansion / stable: total states, sorted.
  std::vector<PartialBeliefState> results;
  // kk / wf: one trace. stable: one trace per result.
  std::vector<DerivationTrace> traces;
};

SemanticsResult kripke_kleene_extension(const OperatorContext& ctx);
// Throws ResourceCapError if the number of modal subformulas exceeds limits.max_modal.
SemanticsResult expansions(const OperatorContext& ctx);
SemanticsResult stable_extensions(const OperatorContext& ctx);
SemanticsResult well_founded_extension(const OperatorContext& ctx);

SemanticsResult solve(const OperatorContext& ctx, SemanticsKind kind);

// Candidates b_g = models of the reduct under each guess g over the modal
// subformulas; every expansion is among them. Sorted, duplicate-free.
std::vector<BeliefState> expansion_candidates(const OperatorContext& ctx);

// Largest set U of unknown worlds such that every w in U evaluates T to t once
// U is made certainly possible.
WorldSet maximal_unfounded_set(const OperatorContext& ctx, const PartialBeliefState& pb);

}  // namespace nmr
