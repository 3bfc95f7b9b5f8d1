#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmr/worlds.hpp"

namespace nmr {

enum class Connective {
  atom,
  top,
  bottom,
  negation,
  conjunction,
  disjunction,
  implication,
  equivalence,
  knows,
};

// Immutable propositional modal formula with a single operator K. Nodes are
// shared between copies; equality is structural.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula truth();
  static Formula falsity();
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);
  static Formula knows(Formula f);
  // M f, i.e. ~K~f.
  static Formula possible(Formula f);

  Connective kind() const;
  // Atom name; empty for other kinds.
  const std::string& name() const;
  // Operand of negation / knows, left operand of binary connectives.
  const Formula& lhs() const;
  const Formula& rhs() const;
  std::size_t arity() const;

  // No `knows` node anywhere.
  bool objective() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A modal theory: formulas plus the vocabulary fixing world indexing.
struct Theory {
  Vocabulary vocabulary;
  std::vector<Formula> formulas;

  friend bool operator==(const Theory&, const Theory&) = default;
};

// Atoms of the formulas in first-occurrence order.
std::vector<std::string> atoms_in_order(const std::vector<Formula>& formulas);

// Builds a theory. Without an explicit vocabulary the atoms are taken in
// first-occurrence order; with one, every atom must belong to it.
Theory make_theory(std::vector<Formula> formulas, std::optional<Vocabulary> vocabulary = std::nullopt);

Formula parse_formula(std::string_view text);
// .ael text: optional `vocab:` line, one formula per line, `#` comments.
Theory parse_theory(std::string_view text);

std::string to_string(const Formula& f);
// .ael text that parses back to an equal theory.
std::string to_string(const Theory& t);

// Distinct arguments of `knows` nodes, innermost before enclosing, in
// first-occurrence order.
std::vector<Formula> collect_modal_subformulas(const Theory& t);
std::vector<Formula> collect_modal_subformulas(const std::vector<Formula>& formulas);

enum class Polarity { positive, negative, both };

constexpr Polarity join(Polarity a, Polarity b) { return a == b ? a : Polarity::both; }
constexpr Polarity flip(Polarity p) {
  switch (p) {
    case Polarity::positive: return Polarity::negative;
    case Polarity::negative: return Polarity::positive;
    default: return Polarity::both;
  }
}
std::string_view to_string(Polarity p);

struct ModalOccurrence {
  std::size_t formula_index;  // which theory member
  std::size_t ordinal;        // pre-order position among the member's K nodes
  Formula argument;
  Polarity polarity;
};

std::vector<ModalOccurrence> modal_polarities(const Theory& t);
bool only_negative(const Theory& t);

}  // namespace nmr
