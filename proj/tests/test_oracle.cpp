#include <doctest.h>

#include "nmr/errors.hpp"
#include "nmr/oracle.hpp"
#include "nmr/semantics.hpp"
#include "test_support.hpp"

using namespace nmr;
using namespace nmr::test;

TEST_CASE("brute expansions and stable extensions on fixtures") {
  const Theory t = load_theory("truthsayer.ael");
  const auto& v = t.vocabulary;
  const OperatorContext ctx(t);
  CHECK(oracle::brute_expansions(ctx) == std::vector{ws(v, {{"P"}}), ws(v, {{}, {"P"}})});
  CHECK(oracle::brute_stable(ctx) == std::vector{ws(v, {{}, {"P"}})});
  const Theory m = load_theory("mutual.ael");
  CHECK(oracle::brute_stable(OperatorContext(m)) ==
        std::vector{ws(m.vocabulary, {{"P"}, {"P", "Q"}}), ws(m.vocabulary, {{"Q"}, {"P", "Q"}})});
  CHECK(oracle::brute_expansions(OperatorContext(load_theory("liar.ael"))).empty());
}

TEST_CASE("an inconsistent objective theory has the empty expansion") {
  const Theory t = theory_of({"P", "~P"});
  const OperatorContext ctx(t);
  CHECK(oracle::brute_expansions(ctx) == std::vector{WorldSet::empty(1)});
  CHECK(totals(expansions(ctx)) == std::vector{WorldSet::empty(1)});
  CHECK(oracle::brute_stable(ctx) == totals(stable_extensions(ctx)));
}

TEST_CASE("algebraic well-founded state") {
  const Theory ts = load_theory("truthsayer.ael");
  CHECK(oracle::algebraic_wf(OperatorContext(ts)) == PartialBeliefState::total(WorldSet::full(1)));
  for (const char* file : {"liar.ael", "t_prime.ael", "t_full.ael", "kp_iff_q.ael", "mutual.ael",
                           "tautology_antecedent.ael", "kp.ael"}) {
    for (TruthFunction tf : {TruthFunction::kleene, TruthFunction::supervaluation}) {
      const OperatorContext ctx(load_theory(file), tf);
      INFO(file);
      CHECK(oracle::algebraic_wf(ctx) == well_founded_extension(ctx).results.front());
    }
  }
}

TEST_CASE("algebraic WF on the Nixon translation") {
  const DefaultTheory dt = load_defaults("nixon.dt");
  const OperatorContext ctx(konolige(dt));
  CHECK(oracle::algebraic_wf(ctx) == well_founded_extension(ctx).results.front());
}

TEST_CASE("oracle budget") {
  const OperatorContext ctx(load_theory("t_prime.ael"));
  CHECK_THROWS_AS(oracle::brute_expansions(ctx, {1}), ResourceCapError);
  CHECK_THROWS_AS(oracle::brute_stable(ctx, {1}), ResourceCapError);
  CHECK_THROWS_AS(oracle::algebraic_wf(ctx, {1}), ResourceCapError);
  CHECK_NOTHROW(oracle::brute_expansions(ctx, {2}));
}

TEST_CASE("the oracle ignores fault injection in the solver context") {
  OperatorContext ctx(load_theory("t_prime.ael"));
  const auto honest = oracle::brute_expansions(ctx);
  ctx.inject_fault(true);
  CHECK(oracle::brute_expansions(ctx) == honest);
}
