#pragma once

#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nmr/defaults.hpp"
#include "nmr/operators.hpp"
#include "nmr/semantics.hpp"
#include "nmr/syntax.hpp"
#include "nmr/worlds.hpp"

namespace nmr::test {

inline std::string corpus_path(const std::string& name) { return std::string(NMR_CORPUS_DIR) + "/" + name; }

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Theory load_theory(const std::string& name) { return parse_theory(read_corpus(name)); }
inline DefaultTheory load_defaults(const std::string& name) { return parse_default_theory(read_corpus(name)); }

inline Theory theory_of(std::initializer_list<const char*> lines) {
  std::string text;
  for (const char* l : lines) text += std::string(l) + "\n";
  return parse_theory(text);
}

// World given by its true atoms.
inline World world(const Vocabulary& v, const std::vector<std::string>& atoms) {
  std::uint32_t index = 0;
  for (const auto& a : atoms) index |= 1u << *v.find(a);
  return World(index);
}

// Belief state given as a list of worlds, each a list of true atoms.
inline WorldSet ws(const Vocabulary& v, std::initializer_list<std::vector<std::string>> worlds) {
  WorldSet out = WorldSet::empty(v.size());
  for (const auto& w : worlds) out.insert(world(v, w));
  return out;
}

inline std::vector<BeliefState> totals(const SemanticsResult& r) {
  std::vector<BeliefState> out;
  for (const auto& s : r.results) out.push_back(s.pp());
  return out;
}

inline const char* const kAtomNames[] = {"P", "Q", "R", "S"};

// Seeded generator of random formulas, theories, states and default theories.
class Random {
 public:
  explicit Random(std::uint32_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Vocabulary vocabulary(std::size_t n) {
    return Vocabulary(std::vector<std::string>(std::begin(kAtomNames), std::begin(kAtomNames) + n));
  }

  Formula formula(std::size_t n, std::size_t depth, bool modal = true) {
    if (depth == 0 || coin(0.25)) {
      const std::size_t pick = below(n + 2);
      if (pick == n) return coin() ? Formula::truth() : Formula::falsity();
      return Formula::atom(kAtomNames[pick % n]);
    }
    if (modal && coin(0.35)) return Formula::knows(formula(n, depth - 1, modal));
    switch (below(6)) {
      case 0: return Formula::negation(formula(n, depth - 1, modal));
      case 1: return Formula::conjunction(formula(n, depth - 1, modal), formula(n, depth - 1, modal));
      case 2: return Formula::disjunction(formula(n, depth - 1, modal), formula(n, depth - 1, modal));
      case 3: return Formula::implication(formula(n, depth - 1, modal), formula(n, depth - 1, modal));
      case 4: return Formula::equivalence(formula(n, depth - 1, modal), formula(n, depth - 1, modal));
      default: return Formula::atom(kAtomNames[below(n)]);
    }
  }

  // 1..max_formulas formulas over exactly n atoms.
  Theory theory(std::size_t n, std::size_t max_formulas = 3, std::size_t depth = 3) {
    std::vector<Formula> fs;
    const std::size_t count = 1 + below(max_formulas);
    for (std::size_t i = 0; i < count; ++i) fs.push_back(formula(n, depth));
    return make_theory(std::move(fs), vocabulary(n));
  }

  // Rule-shaped theories: K only in antecedents or as ~K in conclusions.
  Theory only_negative_theory(std::size_t n, std::size_t max_formulas = 3) {
    std::vector<Formula> fs;
    const std::size_t count = 1 + below(max_formulas);
    for (std::size_t i = 0; i < count; ++i) {
      Formula body = Formula::knows(formula(n, 2, false));
      if (coin()) body = Formula::conjunction(body, formula(n, 1, false));
      Formula head = formula(n, 2, false);
      if (coin(0.3)) head = Formula::disjunction(head, Formula::negation(Formula::knows(formula(n, 1, false))));
      fs.push_back(coin(0.2) ? formula(n, 2, false) : Formula::implication(body, head));
    }
    return make_theory(std::move(fs), vocabulary(n));
  }

  Formula literal(std::size_t n) {
    Formula a = Formula::atom(kAtomNames[below(n)]);
    return coin() ? a : Formula::negation(a);
  }

  WorldSet world_set(std::size_t n) {
    WorldSet out = WorldSet::empty(n);
    for (std::uint32_t i = 0; i < (1u << n); ++i) {
      if (coin()) out.insert(World(i));
    }
    return out;
  }

  PartialBeliefState partial(std::size_t n) {
    const WorldSet pp = world_set(n);
    return {pp, pp & world_set(n)};
  }

  // A state at least as precise as pb.
  PartialBeliefState refine(const PartialBeliefState& pb) {
    WorldSet pp = pb.pp();
    WorldSet cp = pb.cp();
    pb.unknown().for_each([&](World w) {
      const std::size_t choice = below(3);
      if (choice == 0) cp.insert(w);
      if (choice == 1) pp.erase(w);
    });
    return {pp, cp};
  }

  DefaultTheory default_theory(std::size_t n, std::size_t max_facts = 2, std::size_t max_defaults = 3) {
    std::vector<Formula> facts;
    for (std::size_t i = below(max_facts + 1); i > 0; --i) facts.push_back(coin() ? literal(n) : formula(n, 2, false));
    std::vector<Default> defaults;
    for (std::size_t i = 1 + below(max_defaults); i > 0; --i) {
      Default d;
      if (coin(0.6)) d.prerequisite = literal(n);
      d.consequent = coin(0.7) ? literal(n) : formula(n, 1, false);
      if (coin(0.6)) {
        d.justifications.push_back(d.consequent);
      } else {
        for (std::size_t j = below(3); j > 0; --j) d.justifications.push_back(formula(n, 1, false));
      }
      defaults.push_back(std::move(d));
    }
    return make_default_theory(std::move(facts), std::move(defaults), vocabulary(n));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace nmr::test
