#include <doctest.h>

#include "nmr/errors.hpp"
#include "nmr/truth.hpp"
#include "test_support.hpp"

using namespace nmr;
using namespace nmr::test;

namespace {
const TruthValue t = TruthValue::t, u = TruthValue::u, f = TruthValue::f;
}

TEST_CASE("Kleene connectives") {
  CHECK(kleene_not(u) == u);
  CHECK(kleene_and(f, u) == f);
  CHECK(kleene_and(t, u) == u);
  CHECK(kleene_or(t, u) == t);
  CHECK(kleene_implies(u, t) == t);
  CHECK(kleene_implies(u, f) == u);
  CHECK(kleene_iff(u, u) == u);
  CHECK(kleene_iff(t, f) == f);
  CHECK(leq_p(u, t));
  CHECK_FALSE(leq_p(t, f));
}

TEST_CASE("S5 evaluation") {
  const Vocabulary v({"P", "Q"});
  const BeliefState b = ws(v, {{"P"}, {"P", "Q"}});
  CHECK(eval_s5(v, b, world(v, {}), parse_formula("K P")));
  CHECK_FALSE(eval_s5(v, b, world(v, {}), parse_formula("K Q")));
  CHECK(eval_s5(v, b, world(v, {}), parse_formula("~K P -> Q")));
  CHECK(entails(v, b, parse_formula("P")));
  CHECK_FALSE(entails(v, b, parse_formula("Q")));
  CHECK(entails(v, WorldSet::empty(2), parse_formula("false")));
}

TEST_CASE("K does not depend on the evaluation world") {
  Random rnd(5);
  for (int i = 0; i < 100; ++i) {
    const Formula k = Formula::knows(rnd.formula(2, 2));
    const Vocabulary v = rnd.vocabulary(2);
    const BeliefState b = rnd.world_set(2);
    const PartialBeliefState pb = rnd.partial(2);
    for (std::uint32_t w = 1; w < 4; ++w) {
      CHECK(eval_s5(v, b, World(w), k) == eval_s5(v, b, World(0), k));
      CHECK(eval_kleene(v, pb, World(w), k) == eval_kleene(v, pb, World(0), k));
      CHECK(eval_sv(v, pb, World(w), k) == eval_sv(v, pb, World(0), k));
    }
  }
}

TEST_CASE("Kleene K") {
  const Vocabulary v({"P"});
  const Formula kp = parse_formula("K P");
  const PartialBeliefState partial(ws(v, {{}, {"P"}}), ws(v, {{"P"}}));
  CHECK(eval_kleene(v, partial, World(0), kp) == u);
  CHECK(eval_kleene(v, PartialBeliefState(ws(v, {{}, {"P"}}), ws(v, {{}})), World(0), kp) == f);
  CHECK(eval_kleene(v, PartialBeliefState::total(ws(v, {{"P"}})), World(0), kp) == t);
  CHECK(eval_kleene(v, partial, world(v, {"P"}), parse_formula("K P -> P")) == t);
  CHECK(eval_kleene(v, partial, World(0), parse_formula("K P -> P")) == u);
}

TEST_CASE("Kleene versus supervaluation on a tautological antecedent") {
  const Vocabulary v({"P"});
  const Formula g = parse_formula("K P | ~K P -> P");
  const PartialBeliefState pb(ws(v, {{}, {"P"}}), ws(v, {{"P"}}));
  CHECK(eval_kleene(v, pb, World(0), g) == u);
  CHECK(eval_sv(v, pb, World(0), g) == f);
  CHECK(eval_sv(v, pb, world(v, {"P"}), g) == t);
  CHECK(eval_sv(v, pb, World(0), parse_formula("K P | ~K P")) == t);
}

TEST_CASE("supervaluation treats K jointly") {
  const Vocabulary v({"P"});
  const PartialBeliefState pb(ws(v, {{}, {"P"}}), ws(v, {{"P"}}));
  const std::vector<Formula> theory{parse_formula("K P -> P"), parse_formula("~K P -> P")};
  CHECK(eval_sv(v, pb, World(0), std::span<const Formula>(theory)) == f);
  CHECK(eval_kleene_theory(v, pb, World(0), theory) == u);
}

TEST_CASE("completion cap") {
  std::vector<std::string> names;
  for (int i = 0; i < 5; ++i) names.push_back("A" + std::to_string(i));
  const Vocabulary v(names);
  const PartialBeliefState bot = bottom_p(v);
  CHECK_THROWS_AS(eval_sv(v, bot, World(0), parse_formula("K A0"), 20), ResourceCapError);
  CHECK_NOTHROW(eval_sv(v, bot, World(0), parse_formula("K A0"), 32));
}

TEST_CASE("models of objective formulas") {
  const Vocabulary v({"P", "Q"});
  const std::vector<Formula> fs{parse_formula("P | Q"), parse_formula("~(P & Q)")};
  CHECK(models(v, fs) == ws(v, {{"P"}, {"Q"}}));
  const std::vector<Formula> modal{parse_formula("K P")};
  CHECK_THROWS_AS(models(v, modal), PreconditionError);
}

TEST_CASE("compiled evaluation agrees with the tree evaluators") {
  Random rnd(9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rnd.below(3);
    const Theory th = rnd.theory(n);
    const CompiledTheory ct(th.vocabulary, th.formulas);
    const PartialBeliefState pb = rnd.partial(n);
    const PartialBeliefState k = evaluate_all(ct, pb, {TruthFunction::kleene});
    const PartialBeliefState s = evaluate_all(ct, pb, {TruthFunction::supervaluation});
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
      const TruthValue kv = eval_kleene_theory(th.vocabulary, pb, World(w), th.formulas);
      const TruthValue sv = eval_sv(th.vocabulary, pb, World(w), std::span<const Formula>(th.formulas));
      CHECK(k.status(World(w)) == kv);
      CHECK(s.status(World(w)) == sv);
    }
  }
}

TEST_CASE("vocabulary mismatch") {
  const Vocabulary v({"P"});
  CHECK_THROWS_AS(CompiledTheory(v, std::vector<Formula>{parse_formula("Q")}), VocabularyMismatch);
  CHECK_THROWS_AS(eval_kleene(v, bottom_p(Vocabulary({"P", "Q"})), World(0), parse_formula("P")), VocabularyMismatch);
}
