#include "nmr/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nmr/errors.hpp"

namespace nmr::oracle {

namespace {

void check_budget(const OperatorContext& ctx, const OracleBudget& budget) {
  if (ctx.atom_count() > budget.max_atoms)
    throw ResourceCapError("oracle budget allows " + std::to_string(budget.max_atoms) + " atoms, theory has " +
                           std::to_string(ctx.atom_count()));
}

bool atom_true(const Vocabulary& v, World w, const std::string& name) {
  const auto idx = v.find(name);
  if (!idx) throw VocabularyMismatch("atom '" + name + "' is not in the vocabulary");
  return w.holds(*idx);
}

// Direct S5 evaluation in a fixed belief state. K values do not depend on the
// world, so they are cached per argument.
class S5Evaluator {
 public:
  S5Evaluator(const Vocabulary& v, const WorldSet& b) : v_(v), b_(b.worlds()) {}

  bool holds(World w, const Formula& f) {
    switch (f.kind()) {
      case Connective::atom: return atom_true(v_, w, f.name());
      case Connective::top: return true;
      case Connective::bottom: return false;
      case Connective::negation: return !holds(w, f.lhs());
      case Connective::conjunction: return holds(w, f.lhs()) && holds(w, f.rhs());
      case Connective::disjunction: return holds(w, f.lhs()) || holds(w, f.rhs());
      case Connective::implication: return !holds(w, f.lhs()) || holds(w, f.rhs());
      case Connective::equivalence: return holds(w, f.lhs()) == holds(w, f.rhs());
      case Connective::knows: {
        const std::string key = to_string(f.lhs());
        if (const auto it = known_.find(key); it != known_.end()) return it->second;
        const bool value = std::all_of(b_.begin(), b_.end(), [&](World u) { return holds(u, f.lhs()); });
        known_.emplace(key, value);
        return value;
      }
    }
    return false;
  }

  bool holds_all(World w, const std::vector<Formula>& t) {
    return std::all_of(t.begin(), t.end(), [&](const Formula& f) { return holds(w, f); });
  }

 private:
  const Vocabulary& v_;
  std::vector<World> b_;
  std::map<std::string, bool> known_;
};

// Direct evaluation on a raw pair (pp, cp) as a bilattice product: `t` says the
// value is true, `nf` says it is not false. K reads `t` over pp and `nf` over
// cp, so the two components never interfere. On consistent pairs this is the
// Kleene evaluation.
struct Bivalue {
  bool t;
  bool nf;
};

class BilatticeEvaluator {
 public:
  BilatticeEvaluator(const Vocabulary& v, const WorldSet& pp, const WorldSet& cp)
      : v_(v), pp_(pp.worlds()), cp_(cp.worlds()) {}

  Bivalue value(World w, const Formula& f) {
    switch (f.kind()) {
      case Connective::atom: {
        const bool a = atom_true(v_, w, f.name());
        return {a, a};
      }
      case Connective::top: return {true, true};
      case Connective::bottom: return {false, false};
      case Connective::negation: return negate(value(w, f.lhs()));
      case Connective::conjunction: return conj(value(w, f.lhs()), value(w, f.rhs()));
      case Connective::disjunction: return disj(value(w, f.lhs()), value(w, f.rhs()));
      case Connective::implication: return disj(negate(value(w, f.lhs())), value(w, f.rhs()));
      case Connective::equivalence: {
        const Bivalue a = value(w, f.lhs());
        const Bivalue b = value(w, f.rhs());
        return conj(disj(negate(a), b), disj(negate(b), a));
      }
      case Connective::knows: {
        const std::string key = to_string(f.lhs());
        if (const auto it = known_.find(key); it != known_.end()) return it->second;
        Bivalue k{true, true};
        for (World u : pp_) k.t = k.t && value(u, f.lhs()).t;
        for (World u : cp_) k.nf = k.nf && value(u, f.lhs()).nf;
        known_.emplace(key, k);
        return k;
      }
    }
    return {false, true};
  }

 private:
  static Bivalue negate(Bivalue a) { return {!a.nf, !a.t}; }
  static Bivalue conj(Bivalue a, Bivalue b) { return {a.t && b.t, a.nf && b.nf}; }
  static Bivalue disj(Bivalue a, Bivalue b) { return {a.t || b.t, a.nf || b.nf}; }

  const Vocabulary& v_;
  std::vector<World> pp_;
  std::vector<World> cp_;
  std::map<std::string, Bivalue> known_;
};

// Worlds where the theory is not false on the raw pair (pp, cp).
WorldSet not_false_worlds(const OperatorContext& ctx, const WorldSet& pp, const WorldSet& cp) {
  const auto& v = ctx.vocabulary();
  const auto& t = ctx.theory().formulas;
  const std::size_t atoms = ctx.atom_count();
  WorldSet out = WorldSet::empty(atoms);
  if (ctx.truth() == TruthFunction::kleene) {
    BilatticeEvaluator eval(v, pp, cp);
    for (std::uint32_t i = 0; i < pp.universe_size(); ++i) {
      if (std::all_of(t.begin(), t.end(), [&](const Formula& f) { return eval.value(World(i), f).nf; }))
        out.insert(World(i));
    }
    return out;
  }
  // Supervaluation. Consistent pairs: T holds in some b with cp <= b <= pp.
  // Otherwise the dual reading: T holds in every b with pp <= b <= cp.
  const bool consistent = cp.is_subset_of(pp);
  const WorldSet low = consistent ? cp : pp;
  const auto free = ((pp | cp) - (pp & cp)).worlds();
  WorldSet any = WorldSet::empty(atoms);
  WorldSet every = WorldSet::full(atoms);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    WorldSet b = low;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((mask >> i) & 1u) b.insert(free[i]);
    }
    S5Evaluator eval(v, b);
    WorldSet holds = WorldSet::empty(atoms);
    for (std::uint32_t i = 0; i < pp.universe_size(); ++i) {
      if (eval.holds_all(World(i), t)) holds.insert(World(i));
    }
    any |= holds;
    every &= holds;
  }
  return consistent ? any : every;
}

// Least fixpoint (iterated from W) of z -> { w : T is not false at w in (z, y) }.
WorldSet stable_revision_of(const OperatorContext& ctx, const WorldSet& y) {
  WorldSet z = WorldSet::full(ctx.atom_count());
  while (true) {
    WorldSet next = not_false_worlds(ctx, z, y);
    if (next == z) return z;
    z = std::move(next);
  }
}

// Every subset of W, as world sets.
template <class F>
void for_each_belief_state(std::size_t atoms, F&& f) {
  const std::size_t universe = std::size_t{1} << atoms;
  const std::uint64_t count = std::uint64_t{1} << universe;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    WorldSet b = WorldSet::empty(atoms);
    for (std::size_t i = 0; i < universe; ++i) {
      if ((mask >> i) & 1u) b.insert(World(static_cast<std::uint32_t>(i)));
    }
    f(b);
  }
}

}  // namespace

std::vector<BeliefState> brute_expansions(const OperatorContext& ctx, const OracleBudget& budget) {
  check_budget(ctx, budget);
  std::vector<BeliefState> out;
  for_each_belief_state(ctx.atom_count(), [&](const WorldSet& b) {
    S5Evaluator eval(ctx.vocabulary(), b);
    WorldSet image = WorldSet::empty(ctx.atom_count());
    for (std::uint32_t i = 0; i < b.universe_size(); ++i) {
      if (eval.holds_all(World(i), ctx.theory().formulas)) image.insert(World(i));
    }
    if (image == b) out.push_back(b);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BeliefState> brute_stable(const OperatorContext& ctx, const OracleBudget& budget) {
  check_budget(ctx, budget);
  std::vector<BeliefState> out;
  for_each_belief_state(ctx.atom_count(), [&](const WorldSet& b) {
    // Stable derivation from (W, b): remove f-worlds while b stays inside pp.
    WorldSet pp = WorldSet::full(ctx.atom_count());
    while (true) {
      const WorldSet next = pp & not_false_worlds(ctx, pp, b);
      if (!b.is_subset_of(next)) return;
      if (next == pp) break;
      pp = std::move(next);
    }
    if (pp == b) out.push_back(b);
  });
  std::sort(out.begin(), out.end());
  return out;
}

PartialBeliefState algebraic_wf(const OperatorContext& ctx, const OracleBudget& budget) {
  check_budget(ctx, budget);
  const std::size_t atoms = ctx.atom_count();
  WorldSet x = WorldSet::full(atoms);
  WorldSet y = WorldSet::empty(atoms);
  // A precision-increasing chain of pairs has at most 2|W| + 1 distinct members.
  for (std::size_t round = 0;; ++round) {
    if (round > 2 * x.universe_size() + 1) throw InternalError("alternating fixpoint iteration does not converge");
    WorldSet next_x = stable_revision_of(ctx, y);
    WorldSet next_y = stable_revision_of(ctx, x);
    if (next_x == x && next_y == y) break;
    x = std::move(next_x);
    y = std::move(next_y);
  }
  if (!y.is_subset_of(x)) throw InternalError("alternating fixpoint converged to an inconsistent pair");
  return {x, y};
}

}  // namespace nmr::oracle
