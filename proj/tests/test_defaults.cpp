#include <doctest.h>

#include "nmr/defaults.hpp"
#include "nmr/errors.hpp"
#include "test_support.hpp"

using namespace nmr;
using namespace nmr::test;

TEST_CASE("parse a default theory") {
  const DefaultTheory dt = load_defaults("nixon.dt");
  CHECK(dt.facts.size() == 2);
  REQUIRE(dt.defaults.size() == 2);
  CHECK(dt.defaults[0].prerequisite == parse_formula("R"));
  CHECK(dt.defaults[0].justifications == std::vector{parse_formula("H")});
  CHECK(dt.defaults[0].consequent == parse_formula("H"));
  CHECK(dt.vocabulary.names() == std::vector<std::string>{"R", "Q", "H", "D"});
}

TEST_CASE("default syntax variants") {
  const DefaultTheory dt = parse_default_theory(": P / P\nQ : / Q\n: A, ~B / A | B\n");
  REQUIRE(dt.defaults.size() == 3);
  CHECK(dt.defaults[0].prerequisite == Formula::truth());
  CHECK(dt.defaults[1].justifications.empty());
  CHECK(dt.defaults[2].justifications.size() == 2);
  CHECK(parse_default_theory(to_string(dt)) == dt);
}

TEST_CASE("default parse errors") {
  CHECK_THROWS_AS(parse_default_theory("P : Q\n"), ParseError);
  CHECK_THROWS(parse_default_theory("K P\n"));
  CHECK_THROWS(parse_default_theory(": K P / P\n"));
}

TEST_CASE("Konolige translation") {
  const DefaultTheory nixon = load_defaults("nixon.dt");
  CHECK(konolige(nixon.defaults[0]) == parse_formula("K R & ~K ~H -> H"));
  CHECK(konolige(parse_default_theory(": N / N\n").defaults[0]) == parse_formula("~K ~N -> N"));
  CHECK(konolige(parse_default_theory("A : / B\n").defaults[0]) == parse_formula("K A -> B"));
  CHECK(konolige(parse_default_theory(": / B\n").defaults[0]) == parse_formula("B"));
  const Theory t = konolige(nixon);
  CHECK(t.formulas.size() == 4);
  CHECK(t.vocabulary == nixon.vocabulary);
  CHECK(t.formulas[0] == parse_formula("R & Q"));
}

TEST_CASE("Nixon: two extensions") {
  const DefaultTheory dt = load_defaults("nixon.dt");
  const auto& v = dt.vocabulary;
  const auto ext = reiter_extensions(dt);
  REQUIRE(ext.size() == 2);
  int hawks = 0, doves = 0;
  for (const auto& e : ext) {
    CHECK(entails(v, e, parse_formula("R & Q")));
    hawks += entails(v, e, parse_formula("H & ~D"));
    doves += entails(v, e, parse_formula("D & ~H"));
  }
  CHECK(hawks == 1);
  CHECK(doves == 1);
  const AlignmentReport report = align_check(dt);
  CHECK(report.aligned);
  CHECK(report.reiter == report.stable);
  CHECK_FALSE(report.wf.results.front().is_total());
}

TEST_CASE("prioritized Nixon has a unique extension") {
  const DefaultTheory dt = load_defaults("nixon_priority.dt");
  const auto ext = reiter_extensions(dt);
  REQUIRE(ext.size() == 1);
  CHECK(entails(dt.vocabulary, ext.front(), parse_formula("D")));
  CHECK(align_check(dt).aligned);
}

TEST_CASE("convention and empty theories") {
  const DefaultTheory c = load_defaults("convention.dt");
  const auto ext = reiter_extensions(c);
  REQUIRE(ext.size() == 1);
  CHECK(entails(c.vocabulary, ext.front(), parse_formula("NatUSA")));
  const DefaultTheory e = load_defaults("empty.dt");
  CHECK(e.vocabulary.empty());
  CHECK(reiter_extensions(e) == std::vector{WorldSet::full(0)});
  CHECK(align_check(e).aligned);
}

TEST_CASE("Swede and Japanese") {
  const DefaultTheory base = load_defaults("swede.dt");
  const auto b = reiter_extensions(base);
  REQUIRE(b.size() == 1);
  CHECK(b.front() == models(base.vocabulary, base.facts));
  const DefaultTheory combined = load_defaults("swede_combined.dt");
  const auto c = reiter_extensions(combined);
  REQUIRE(c.size() == 1);
  CHECK(entails(combined.vocabulary, c.front(), parse_formula("Bl | Bk")));
}

TEST_CASE("inconsistent facts give the empty extension") {
  const DefaultTheory dt = parse_default_theory("P\n~P\n: Q / Q\n");
  CHECK(reiter_extensions(dt) == std::vector{WorldSet::empty(2)});
}

TEST_CASE("reiter_gamma is antitone") {
  Random rnd(41);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rnd.below(3);
    const DefaultTheory dt = rnd.default_theory(n);
    const BeliefState small = rnd.world_set(n);
    const BeliefState big = small | rnd.world_set(n);
    CHECK(reiter_gamma(dt, big).is_subset_of(reiter_gamma(dt, small)));
    for (const auto& e : reiter_extensions(dt)) CHECK(reiter_gamma(dt, e) == e);
  }
}

TEST_CASE("dl semantics route through the translation") {
  const DefaultTheory dt = load_defaults("nixon.dt");
  CHECK(totals(dl_semantics(dt, DlSemantics::reiter)) == reiter_extensions(dt));
  CHECK(dl_semantics(dt, DlSemantics::kk).results.size() == 1);
  CHECK(dl_semantics(dt, DlSemantics::weak).results.size() >= 2);
  CHECK(to_string(DlSemantics::reiter) == "reiter");
}

TEST_CASE("default cap") {
  Limits tight;
  tight.max_defaults = 1;
  CHECK_THROWS_AS(reiter_extensions(load_defaults("nixon.dt"), tight), ResourceCapError);
}
