#include <doctest.h>

#include "nmr/errors.hpp"
#include "nmr/operators.hpp"
#include "test_support.hpp"

using namespace nmr;
using namespace nmr::test;

TEST_CASE("moore_step on the truth sayer") {
  const Theory t = load_theory("truthsayer.ael");
  const auto& v = t.vocabulary;
  const OperatorContext ctx(t);
  CHECK(moore_step(ctx, ws(v, {{"P"}})) == ws(v, {{"P"}}));
  CHECK(moore_step(ctx, ws(v, {{}, {"P"}})) == ws(v, {{}, {"P"}}));
  CHECK(moore_step(ctx, ws(v, {{}})) == ws(v, {{}, {"P"}}));
  CHECK(moore_step(ctx, WorldSet::empty(1)) == ws(v, {{"P"}}));
}

TEST_CASE("moore_step on the liar has no fixpoint") {
  const Theory t = load_theory("liar.ael");
  const OperatorContext ctx(t);
  for (std::uint32_t m = 0; m < 4; ++m) {
    WorldSet b = WorldSet::empty(1);
    for (std::uint32_t w = 0; w < 2; ++w) {
      if ((m >> w) & 1u) b.insert(World(w));
    }
    CHECK(moore_step(ctx, b) != b);
  }
}

TEST_CASE("approx_step and kk_lfp on T'") {
  const Theory t = load_theory("t_prime.ael");
  const auto& v = t.vocabulary;
  const OperatorContext ctx(t);
  const WorldSet p = ws(v, {{"P"}, {"P", "Q"}});
  const WorldSet pq = ws(v, {{"P", "Q"}});
  CHECK(approx_step(ctx, bottom_p(v)) == PartialBeliefState(p, pq));
  CHECK(approx_step(ctx, PartialBeliefState(p, pq)) == PartialBeliefState::total(p));
  std::vector<PartialBeliefState> chain;
  CHECK(kk_lfp(ctx, &chain) == PartialBeliefState::total(p));
  REQUIRE(chain.size() >= 3);
  CHECK(chain.front() == bottom_p(v));
  CHECK(chain[1] == PartialBeliefState(p, pq));
}

TEST_CASE("kk_lfp chains are increasing and bounded") {
  Random rnd(21);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rnd.below(3);
    const Theory t = rnd.theory(n);
    for (TruthFunction tf : {TruthFunction::kleene, TruthFunction::supervaluation}) {
      const OperatorContext ctx(t, tf);
      std::vector<PartialBeliefState> chain;
      const PartialBeliefState fix = kk_lfp(ctx, &chain);
      CHECK(chain.size() <= (std::size_t{1} << n) + 2);
      for (std::size_t j = 1; j < chain.size(); ++j) CHECK(leq_p(chain[j - 1], chain[j]));
      CHECK(approx_step(ctx, fix) == fix);
    }
  }
}

TEST_CASE("stable_revision") {
  const Theory t = load_theory("t_prime.ael");
  const auto& v = t.vocabulary;
  const OperatorContext ctx(t);
  const WorldSet p = ws(v, {{"P"}, {"P", "Q"}});
  const StableRevision r = stable_revision(ctx, p);
  REQUIRE(std::holds_alternative<BeliefState>(r));
  CHECK(std::get<BeliefState>(r) == p);
  CHECK(std::holds_alternative<NotStableSignal>(stable_revision(ctx, enumerate_worlds(v))));
  const StableRevision grown = stable_revision(ctx, ws(v, {{"P", "Q"}}));
  REQUIRE(std::holds_alternative<BeliefState>(grown));
  CHECK(std::get<BeliefState>(grown) == p);
}

TEST_CASE("stable_revision signals when a world of b is dropped") {
  const Theory t = load_theory("liar.ael");
  const OperatorContext ctx(t);
  CHECK(std::holds_alternative<NotStableSignal>(stable_revision(ctx, enumerate_worlds(t.vocabulary))));
}

TEST_CASE("stable_revision records removed worlds") {
  const Theory t = load_theory("truthsayer.ael");
  const auto& v = t.vocabulary;
  const OperatorContext ctx(t);
  std::vector<BeliefState> removed;
  const StableRevision r = stable_revision(ctx, enumerate_worlds(v), &removed);
  REQUIRE(std::holds_alternative<BeliefState>(r));
  CHECK(std::get<BeliefState>(r) == enumerate_worlds(v));
  for (const auto& step : removed) CHECK_FALSE(step.is_empty());
  CHECK(removed.empty());
  const StableRevision r2 = stable_revision(ctx, ws(v, {{"P"}}), &removed);
  REQUIRE(std::holds_alternative<BeliefState>(r2));
  CHECK(std::get<BeliefState>(r2) == enumerate_worlds(v));
}

TEST_CASE("revisions contain their argument; fixed ones are Moore fixpoints") {
  Random rnd(22);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rnd.below(3);
    const OperatorContext ctx(rnd.theory(n));
    const BeliefState b = rnd.world_set(n);
    const StableRevision r = stable_revision(ctx, b);
    if (const auto* got = std::get_if<BeliefState>(&r)) {
      CHECK(b.is_subset_of(*got));
      if (*got == b) CHECK(moore_step(ctx, b) == b);
    }
  }
}

TEST_CASE("klfp_moore") {
  const Theory t = theory_of({"P", "K P -> Q"});
  const OperatorContext ctx(t);
  CHECK(klfp_moore(ctx) == ws(t.vocabulary, {{"P", "Q"}}));
  CHECK_THROWS_AS(klfp_moore(OperatorContext(load_theory("t_prime.ael"))), PreconditionError);
  const OperatorContext ts(load_theory("truthsayer.ael"));
  CHECK(klfp_moore(ts) == WorldSet::full(1));
  CHECK_THROWS_AS(klfp_moore(OperatorContext(load_theory("kp.ael"))), PreconditionError);
}

TEST_CASE("context caps and truth switching") {
  const Theory t = load_theory("t_prime.ael");
  Limits tight;
  tight.max_atoms = 1;
  CHECK_THROWS_AS(OperatorContext(t, TruthFunction::kleene, tight), ResourceCapError);
  const OperatorContext ctx(t);
  CHECK(ctx.with_truth(TruthFunction::supervaluation).truth() == TruthFunction::supervaluation);
  CHECK(ctx.atom_count() == 2);
}

TEST_CASE("fault injection corrupts Kleene evaluation") {
  const Theory t = load_theory("t_prime.ael");
  OperatorContext ctx(t);
  const PartialBeliefState honest = kk_lfp(ctx);
  ctx.inject_fault(true);
  CHECK(ctx.fault_injected());
  CHECK(kk_lfp(ctx) != honest);
}
