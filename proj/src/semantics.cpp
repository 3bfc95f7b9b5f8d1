#include "nmr/semantics.hpp"

#include <algorithm>

#include "nmr/errors.hpp"

namespace nmr {

std::string_view to_string(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::kripke_kleene: return "kk";
    case SemanticsKind::expansion: return "expansion";
    case SemanticsKind::stable: return "stable";
    case SemanticsKind::well_founded: return "wf";
  }
  return "?";
}

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::kk: return "kk";
    case StepKind::mi: return "mi";
    case StepKind::stable_removal: return "stable-removal";
  }
  return "?";
}

PartialBeliefState DerivationTrace::replay() const {
  WorldSet pp = initial.pp();
  WorldSet cp = initial.cp();
  for (const auto& step : steps) {
    const WorldSet unknown = pp - cp;
    if (!step.made_possible.is_subset_of(unknown) || !step.made_impossible.is_subset_of(unknown))
      throw InternalError("trace step changes a decided world");
    cp |= step.made_possible;
    pp -= step.made_impossible;
    if (PartialBeliefState(pp, cp) != step.state) throw InternalError("trace step does not reproduce its state");
  }
  return {pp, cp};
}

namespace {

TraceStep diff_step(StepKind kind, const PartialBeliefState& before, const PartialBeliefState& after) {
  return {kind, after.cp() - before.cp(), before.pp() - after.pp(), after};
}

void sort_unique(std::vector<BeliefState>& states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
}

}  // namespace

SemanticsResult kripke_kleene_extension(const OperatorContext& ctx) {
  std::vector<PartialBeliefState> chain;
  PartialBeliefState result = kk_lfp(ctx, &chain);
  DerivationTrace trace{chain.front(), {}};
  for (std::size_t i = 1; i < chain.size(); ++i) trace.steps.push_back(diff_step(StepKind::kk, chain[i - 1], chain[i]));
  return {SemanticsKind::kripke_kleene, ctx.truth(), {std::move(result)}, {std::move(trace)}};
}

std::vector<BeliefState> expansion_candidates(const OperatorContext& ctx) {
  const auto& theory = ctx.compiled();
  const std::size_t m = theory.modal_count();
  if (m > ctx.limits().max_modal)
    throw ResourceCapError(std::to_string(m) + " modal subformulas exceed the cap of " +
                           std::to_string(ctx.limits().max_modal));
  std::vector<BeliefState> out;
  std::vector<std::uint8_t> guess(m, 0);
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t i = 0; i < m; ++i) guess[i] = (mask >> i) & 1u;
    out.push_back(theory.models(guess));
  }
  sort_unique(out);
  return out;
}

SemanticsResult expansions(const OperatorContext& ctx) {
  SemanticsResult result{SemanticsKind::expansion, ctx.truth(), {}, {}};
  for (const auto& b : expansion_candidates(ctx)) {
    if (moore_step(ctx, b) == b) result.results.push_back(PartialBeliefState::total(b));
  }
  return result;
}

SemanticsResult stable_extensions(const OperatorContext& ctx) {
  SemanticsResult result{SemanticsKind::stable, ctx.truth(), {}, {}};
  for (const auto& b : expansion_candidates(ctx)) {
    std::vector<BeliefState> removed;
    const StableRevision revision = stable_revision(ctx, b, &removed);
    const auto* reached = std::get_if<BeliefState>(&revision);
    if (reached == nullptr || *reached != b) continue;
    const WorldSet all = WorldSet::full(ctx.atom_count());
    DerivationTrace trace{PartialBeliefState(all, b), {}};
    WorldSet pp = all;
    for (const auto& round : removed) {
      pp -= round;
      trace.steps.push_back({StepKind::stable_removal, WorldSet::empty(ctx.atom_count()), round,
                             PartialBeliefState(pp, b)});
    }
    result.results.push_back(PartialBeliefState::total(b));
    result.traces.push_back(std::move(trace));
  }
  return result;
}

WorldSet maximal_unfounded_set(const OperatorContext& ctx, const PartialBeliefState& pb) {
  // Greatest fixpoint of U -> { w in U : T is t at w in pb[U := t] }.
  WorldSet u = pb.unknown();
  while (!u.is_empty()) {
    const PartialBeliefState assumed(pb.pp(), pb.cp() | u);
    WorldSet next = u & approx_step(ctx, assumed).cp();
    if (next == u) break;
    u = std::move(next);
  }
  return u;
}

SemanticsResult well_founded_extension(const OperatorContext& ctx) {
  PartialBeliefState current = PartialBeliefState::bottom(ctx.atom_count());
  DerivationTrace trace{current, {}};
  while (true) {
    // Kripke-Kleene closure: decide every unknown world the theory decides.
    while (true) {
      const PartialBeliefState image = approx_step(ctx, current);
      if (!current.cp().is_subset_of(image.cp()) || !image.pp().is_subset_of(current.pp()))
        throw InternalError("a decided world changed status during the well-founded process");
      const WorldSet unknown = current.unknown();
      const WorldSet to_possible = unknown & image.cp();
      const WorldSet to_impossible = unknown - image.pp();
      if (to_possible.is_empty() && to_impossible.is_empty()) break;
      PartialBeliefState next(current.pp() - to_impossible, current.cp() | to_possible);
      trace.steps.push_back({StepKind::kk, to_possible, to_impossible, next});
      current = std::move(next);
    }
    const WorldSet unfounded = maximal_unfounded_set(ctx, current);
    if (unfounded.is_empty()) break;
    PartialBeliefState next(current.pp(), current.cp() | unfounded);
    trace.steps.push_back({StepKind::mi, unfounded, WorldSet::empty(ctx.atom_count()), next});
    current = std::move(next);
  }
  return {SemanticsKind::well_founded, ctx.truth(), {current}, {std::move(trace)}};
}

SemanticsResult solve(const OperatorContext& ctx, SemanticsKind kind) {
  switch (kind) {
    case SemanticsKind::kripke_kleene: return kripke_kleene_extension(ctx);
    case SemanticsKind::expansion: return expansions(ctx);
    case SemanticsKind::stable: return stable_extensions(ctx);
    case SemanticsKind::well_founded: return well_founded_extension(ctx);
  }
  throw std::invalid_argument("unknown semantics");
}

}  // namespace nmr
