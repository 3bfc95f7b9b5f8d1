#include "nmr/operators.hpp"

#include "nmr/errors.hpp"

namespace nmr {

OperatorContext::OperatorContext(Theory theory, TruthFunction truth, Limits limits)
    : theory_(std::move(theory)), truth_(truth), limits_(limits) {
  check_atom_cap(theory_.vocabulary.size(), limits_.max_atoms);
  compiled_ = CompiledTheory(theory_.vocabulary, theory_.formulas);
}

OperatorContext OperatorContext::with_truth(TruthFunction truth) const {
  OperatorContext copy = *this;
  copy.truth_ = truth;
  return copy;
}

BeliefState moore_step(const OperatorContext& ctx, const BeliefState& b) {
  const auto& theory = ctx.compiled();
  return theory.models(theory.s5_modal_values(b));
}

PartialBeliefState approx_step(const OperatorContext& ctx, const PartialBeliefState& pb) {
  return evaluate_all(ctx.compiled(), pb, ctx.eval_options());
}

PartialBeliefState kk_lfp(const OperatorContext& ctx, std::vector<PartialBeliefState>* chain) {
  PartialBeliefState current = PartialBeliefState::bottom(ctx.atom_count());
  if (chain) chain->push_back(current);
  const std::size_t bound = 2 * current.pp().universe_size() + 1;
  for (std::size_t i = 0; i < bound; ++i) {
    PartialBeliefState next = approx_step(ctx, current);
    if (next == current) return current;
    if (!leq_p(current, next)) throw InternalError("Kripke-Kleene iteration is not precision-increasing");
    current = std::move(next);
    if (chain) chain->push_back(current);
  }
  throw InternalError("Kripke-Kleene iteration did not converge");
}

StableRevision stable_revision(const OperatorContext& ctx, const BeliefState& b, std::vector<BeliefState>* removed) {
  WorldSet z = WorldSet::full(ctx.atom_count());
  if (b.atom_count() != z.atom_count()) throw VocabularyMismatch("belief state and theory over different vocabularies");
  while (true) {
    // (z, b) is consistent here: b is a subset of z.
    const PartialBeliefState image = approx_step(ctx, PartialBeliefState(z, b));
    WorldSet next = z & image.pp();
    if (next == z) return z;
    if (!b.is_subset_of(next)) return NotStableSignal{};
    if (removed) removed->push_back(z - next);
    z = std::move(next);
  }
}

BeliefState klfp_moore(const OperatorContext& ctx) {
  if (!only_negative(ctx.theory()))
    throw PreconditionError("the knowledge-least fixpoint iteration requires only negative K occurrences");
  BeliefState current = WorldSet::full(ctx.atom_count());
  const std::size_t bound = current.universe_size() + 1;
  for (std::size_t i = 0; i < bound; ++i) {
    BeliefState next = moore_step(ctx, current);
    if (next == current) return current;
    if (!leq_k(current, next)) throw InternalError("Moore iteration is not knowledge-increasing");
    current = std::move(next);
  }
  throw InternalError("Moore iteration did not converge");
}

}  // namespace nmr
