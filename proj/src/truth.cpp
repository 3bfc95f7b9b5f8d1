#include "nmr/truth.hpp"

#include <algorithm>

#include "nmr/errors.hpp"

namespace nmr {

std::string_view to_string(TruthFunction t) { return t == TruthFunction::kleene ? "kleene" : "sv"; }

CompiledTheory::CompiledTheory(const Vocabulary& v, std::span<const Formula> formulas) : atoms_(v.size()) {
  std::vector<Formula> list(formulas.begin(), formulas.end());
  modal_ = collect_modal_subformulas(list);
  slot_args_.assign(modal_.size(), -1);
  for (const auto& f : formulas) roots_.push_back(compile(f, v));
}

std::int32_t CompiledTheory::compile(const Formula& f, const Vocabulary& v) {
  Node node{f.kind(), 0, -1, -1};
  switch (f.kind()) {
    case Connective::atom: {
      auto idx = v.find(f.name());
      if (!idx) throw VocabularyMismatch("atom '" + f.name() + "' is not in the vocabulary");
      node.payload = static_cast<std::uint32_t>(*idx);
      break;
    }
    case Connective::top:
    case Connective::bottom:
      break;
    case Connective::knows: {
      const auto it = std::find(modal_.begin(), modal_.end(), f.lhs());
      const auto slot = static_cast<std::size_t>(it - modal_.begin());
      node.payload = static_cast<std::uint32_t>(slot);
      node.lhs = compile(f.lhs(), v);
      if (slot_args_[slot] < 0) slot_args_[slot] = node.lhs;
      break;
    }
    case Connective::negation:
      node.lhs = compile(f.lhs(), v);
      break;
    default:
      node.lhs = compile(f.lhs(), v);
      node.rhs = compile(f.rhs(), v);
      break;
  }
  nodes_.push_back(node);
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

bool CompiledTheory::eval_bool(std::int32_t n, World w, std::span<const std::uint8_t> modal) const {
  const Node& node = nodes_[static_cast<std::size_t>(n)];
  switch (node.kind) {
    case Connective::atom: return w.holds(node.payload);
    case Connective::top: return true;
    case Connective::bottom: return false;
    case Connective::negation: return !eval_bool(node.lhs, w, modal);
    case Connective::conjunction: return eval_bool(node.lhs, w, modal) && eval_bool(node.rhs, w, modal);
    case Connective::disjunction: return eval_bool(node.lhs, w, modal) || eval_bool(node.rhs, w, modal);
    case Connective::implication: return !eval_bool(node.lhs, w, modal) || eval_bool(node.rhs, w, modal);
    case Connective::equivalence: return eval_bool(node.lhs, w, modal) == eval_bool(node.rhs, w, modal);
    case Connective::knows: return modal[node.payload];
  }
  return false;
}

TruthValue CompiledTheory::eval_3(std::int32_t n, World w, std::span<const TruthValue> modal) const {
  const Node& node = nodes_[static_cast<std::size_t>(n)];
  switch (node.kind) {
    case Connective::atom: return from_bool(w.holds(node.payload));
    case Connective::top: return TruthValue::t;
    case Connective::bottom: return TruthValue::f;
    case Connective::negation: return kleene_not(eval_3(node.lhs, w, modal));
    case Connective::conjunction: return kleene_and(eval_3(node.lhs, w, modal), eval_3(node.rhs, w, modal));
    case Connective::disjunction: return kleene_or(eval_3(node.lhs, w, modal), eval_3(node.rhs, w, modal));
    case Connective::implication: return kleene_implies(eval_3(node.lhs, w, modal), eval_3(node.rhs, w, modal));
    case Connective::equivalence: return kleene_iff(eval_3(node.lhs, w, modal), eval_3(node.rhs, w, modal));
    case Connective::knows: return modal[node.payload];
  }
  return TruthValue::u;
}

std::vector<std::uint8_t> CompiledTheory::s5_modal_values(const BeliefState& b) const {
  if (b.atom_count() != atoms_) throw VocabularyMismatch("belief state and theory over different vocabularies");
  std::vector<std::uint8_t> out(slot_args_.size(), 0);
  const auto worlds = b.worlds();
  for (std::size_t i = 0; i < slot_args_.size(); ++i) {
    out[i] = std::all_of(worlds.begin(), worlds.end(), [&](World w) { return eval_bool(slot_args_[i], w, out); });
  }
  return out;
}

std::vector<TruthValue> CompiledTheory::kleene_modal_values(const PartialBeliefState& pb, bool fault) const {
  if (pb.atom_count() != atoms_) throw VocabularyMismatch("belief state and theory over different vocabularies");
  std::vector<TruthValue> out(slot_args_.size(), TruthValue::u);
  const auto certain = pb.cp().worlds();
  const auto potential = pb.pp().worlds();
  for (std::size_t i = 0; i < slot_args_.size(); ++i) {
    auto value_at = [&](World w) { return eval_3(slot_args_[i], w, out); };
    // The f-clause is tested first; on consistent pairs the clauses are disjoint.
    if (std::any_of(certain.begin(), certain.end(), [&](World w) { return value_at(w) == TruthValue::f; })) {
      out[i] = TruthValue::f;
    } else if (std::all_of(potential.begin(), potential.end(),
                           [&](World w) { return value_at(w) == TruthValue::t; })) {
      out[i] = TruthValue::t;
    } else {
      out[i] = TruthValue::u;
    }
    if (fault) out[i] = kleene_not(out[i]);
  }
  return out;
}

bool CompiledTheory::holds(World w, std::span<const std::uint8_t> modal) const {
  return std::all_of(roots_.begin(), roots_.end(), [&](std::int32_t r) { return eval_bool(r, w, modal); });
}

TruthValue CompiledTheory::value(World w, std::span<const TruthValue> modal) const {
  TruthValue acc = TruthValue::t;
  for (auto r : roots_) {
    acc = kleene_and(acc, eval_3(r, w, modal));
    if (acc == TruthValue::f) break;
  }
  return acc;
}

bool CompiledTheory::formula_holds(std::size_t index, World w, std::span<const std::uint8_t> modal) const {
  return eval_bool(roots_.at(index), w, modal);
}

TruthValue CompiledTheory::formula_value(std::size_t index, World w, std::span<const TruthValue> modal) const {
  return eval_3(roots_.at(index), w, modal);
}

BeliefState CompiledTheory::models(std::span<const std::uint8_t> modal) const {
  BeliefState out = BeliefState::empty(atoms_);
  const auto universe = static_cast<std::uint32_t>(out.universe_size());
  for (std::uint32_t i = 0; i < universe; ++i) {
    if (holds(World(i), modal)) out.insert(World(i));
  }
  return out;
}

// Free functions

namespace {

void check_state(const Vocabulary& v, std::size_t atoms) {
  if (atoms != v.size()) throw VocabularyMismatch("state and vocabulary sizes differ");
}

void check_world(const Vocabulary& v, World w) {
  if (w.index() >= (std::uint64_t{1} << v.size())) throw VocabularyMismatch("world outside the vocabulary");
}

}  // namespace

bool eval_s5(const Vocabulary& v, const BeliefState& b, World w, const Formula& f) {
  check_state(v, b.atom_count());
  check_world(v, w);
  CompiledTheory ct(v, std::span<const Formula>(&f, 1));
  const auto modal = ct.s5_modal_values(b);
  return ct.holds(w, modal);
}

bool entails(const Vocabulary& v, const BeliefState& b, const Formula& f) {
  check_state(v, b.atom_count());
  CompiledTheory ct(v, std::span<const Formula>(&f, 1));
  const auto modal = ct.s5_modal_values(b);
  bool all = true;
  b.for_each([&](World w) { all = all && ct.holds(w, modal); });
  return all;
}

BeliefState models(const Vocabulary& v, std::span<const Formula> objective_formulas) {
  CompiledTheory ct(v, objective_formulas);
  if (ct.modal_count() != 0) throw PreconditionError("models() requires objective formulas");
  return ct.models({});
}

TruthValue eval_kleene(const Vocabulary& v, const PartialBeliefState& pb, World w, const Formula& f) {
  return eval_kleene_theory(v, pb, w, std::span<const Formula>(&f, 1));
}

TruthValue eval_kleene_theory(const Vocabulary& v, const PartialBeliefState& pb, World w,
                              std::span<const Formula> theory) {
  check_state(v, pb.atom_count());
  check_world(v, w);
  CompiledTheory ct(v, theory);
  return ct.value(w, ct.kleene_modal_values(pb));
}

namespace {

void check_completions(const PartialBeliefState& pb, std::size_t max_completions) {
  const std::size_t unknown = pb.unknown().size();
  if (unknown > max_completions)
    throw ResourceCapError("supervaluation over " + std::to_string(unknown) + " unknown worlds exceeds the cap of " +
                           std::to_string(max_completions));
}

// Calls f(b) for every total b with cp <= b <= pp.
template <class F>
void for_each_completion(const PartialBeliefState& pb, F&& f) {
  const auto unknown = pb.unknown().worlds();
  const std::uint64_t count = std::uint64_t{1} << unknown.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    BeliefState b = pb.cp();
    for (std::size_t i = 0; i < unknown.size(); ++i) {
      if ((mask >> i) & 1u) b.insert(unknown[i]);
    }
    if (!f(b)) return;
  }
}

}  // namespace

TruthValue eval_sv(const Vocabulary& v, const PartialBeliefState& pb, World w, std::span<const Formula> theory,
                   std::size_t max_completions) {
  check_state(v, pb.atom_count());
  check_world(v, w);
  check_completions(pb, max_completions);
  CompiledTheory ct(v, theory);
  bool seen_true = false;
  bool seen_false = false;
  for_each_completion(pb, [&](const BeliefState& b) {
    const auto modal = ct.s5_modal_values(b);
    (ct.holds(w, modal) ? seen_true : seen_false) = true;
    return !(seen_true && seen_false);
  });
  if (seen_true && !seen_false) return TruthValue::t;
  if (seen_false && !seen_true) return TruthValue::f;
  return TruthValue::u;
}

TruthValue eval_sv(const Vocabulary& v, const PartialBeliefState& pb, World w, const Formula& f,
                   std::size_t max_completions) {
  return eval_sv(v, pb, w, std::span<const Formula>(&f, 1), max_completions);
}

PartialBeliefState evaluate_all(const CompiledTheory& theory, const PartialBeliefState& pb, const EvalOptions& opts) {
  const std::size_t atoms = theory.atom_count();
  if (pb.atom_count() != atoms) throw VocabularyMismatch("belief state and theory over different vocabularies");
  const auto universe = static_cast<std::uint32_t>(std::size_t{1} << atoms);
  WorldSet not_false = WorldSet::empty(atoms);
  WorldSet is_true = WorldSet::empty(atoms);

  if (opts.truth == TruthFunction::kleene) {
    const auto modal = theory.kleene_modal_values(pb, opts.fault);
    for (std::uint32_t i = 0; i < universe; ++i) {
      const TruthValue val = theory.value(World(i), modal);
      if (val != TruthValue::f) not_false.insert(World(i));
      if (val == TruthValue::t) is_true.insert(World(i));
    }
    return {std::move(not_false), std::move(is_true)};
  }

  // Supervaluation: w is t if it satisfies T in every completion, f if in none.
  check_completions(pb, opts.max_completions);
  WorldSet seen_true = WorldSet::empty(atoms);
  WorldSet seen_false = WorldSet::empty(atoms);
  for_each_completion(pb, [&](const BeliefState& b) {
    const auto modal = theory.s5_modal_values(b);
    for (std::uint32_t i = 0; i < universe; ++i) {
      if (theory.holds(World(i), modal)) seen_true.insert(World(i));
      else seen_false.insert(World(i));
    }
    return true;
  });
  return {seen_true, WorldSet::full(atoms) - seen_false};
}

}  // namespace nmr
