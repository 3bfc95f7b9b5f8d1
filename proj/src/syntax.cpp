#include "nmr/syntax.hpp"

#include <algorithm>
#include <unordered_set>

#include "nmr/errors.hpp"
#include "parser.hpp"

namespace nmr {

struct Formula::Node {
  Connective kind;
  std::string name;
  std::vector<Formula> children;
  bool objective;
  std::size_t depth;
};

namespace {

const std::string kNoName;

}  // namespace

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Connective::atom, std::move(name), {}, true, 1}));
}

Formula Formula::truth() { return Formula(std::make_shared<const Node>(Node{Connective::top, {}, {}, true, 1})); }

Formula Formula::falsity() {
  return Formula(std::make_shared<const Node>(Node{Connective::bottom, {}, {}, true, 1}));
}

Formula Formula::negation(Formula f) {
  const bool obj = f.objective();
  const std::size_t d = f.depth() + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::negation, {}, {std::move(f)}, obj, d}));
}

Formula Formula::knows(Formula f) {
  const std::size_t d = f.depth() + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::knows, {}, {std::move(f)}, false, d}));
}

Formula Formula::possible(Formula f) { return negation(knows(negation(std::move(f)))); }

Formula Formula::conjunction(Formula a, Formula b) {
  const bool obj = a.objective() && b.objective();
  const std::size_t d = std::max(a.depth(), b.depth()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::conjunction, {}, {std::move(a), std::move(b)}, obj, d}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  const bool obj = a.objective() && b.objective();
  const std::size_t d = std::max(a.depth(), b.depth()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::disjunction, {}, {std::move(a), std::move(b)}, obj, d}));
}

Formula Formula::implication(Formula a, Formula b) {
  const bool obj = a.objective() && b.objective();
  const std::size_t d = std::max(a.depth(), b.depth()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::implication, {}, {std::move(a), std::move(b)}, obj, d}));
}

Formula Formula::equivalence(Formula a, Formula b) {
  const bool obj = a.objective() && b.objective();
  const std::size_t d = std::max(a.depth(), b.depth()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::equivalence, {}, {std::move(a), std::move(b)}, obj, d}));
}

Connective Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->kind == Connective::atom ? node_->name : kNoName; }
std::size_t Formula::arity() const { return node_->children.size(); }
bool Formula::objective() const { return node_->objective; }
std::size_t Formula::depth() const { return node_->depth; }

const Formula& Formula::lhs() const {
  if (node_->children.empty()) throw std::logic_error("formula has no operands");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() < 2) throw std::logic_error("formula has no right operand");
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind || a.node_->depth != b.node_->depth) return false;
  if (a.node_->kind == Connective::atom) return a.node_->name == b.node_->name;
  return a.node_->children == b.node_->children;
}

// Theories

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out, std::unordered_set<std::string>& seen) {
  if (f.kind() == Connective::atom) {
    if (seen.insert(f.name()).second) out.push_back(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(i == 0 ? f.lhs() : f.rhs(), out, seen);
}

}  // namespace

std::vector<std::string> atoms_in_order(const std::vector<Formula>& formulas) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& f : formulas) collect_atoms(f, out, seen);
  return out;
}

Theory make_theory(std::vector<Formula> formulas, std::optional<Vocabulary> vocabulary) {
  auto atoms = atoms_in_order(formulas);
  if (!vocabulary) return Theory{Vocabulary(std::move(atoms)), std::move(formulas)};
  for (const auto& a : atoms) {
    if (!vocabulary->find(a)) throw VocabularyMismatch("atom '" + a + "' is not in the vocabulary");
  }
  return Theory{std::move(*vocabulary), std::move(formulas)};
}

Formula parse_formula(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) throw ParseError(1, 1, "a formula must fit on one line");
  auto tokens = detail::tokenize(text, 1);
  detail::FormulaParser parser(tokens);
  Formula f = parser.parse_formula();
  if (!parser.at(detail::Tok::end))
    parser.fail(parser.peek(), "unexpected " + std::string(detail::describe(parser.peek().kind)));
  return f;
}

Theory parse_theory(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::optional<Vocabulary> vocab;
  std::vector<Formula> formulas;
  std::vector<std::size_t> line_numbers;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i == 0) {
      if (auto names = detail::parse_vocab_header(lines[i])) {
        vocab = Vocabulary(std::move(*names));
        continue;
      }
    }
    auto tokens = detail::tokenize(lines[i].text, lines[i].number);
    detail::FormulaParser parser(tokens);
    formulas.push_back(parser.parse_formula());
    if (!parser.at(detail::Tok::end))
      parser.fail(parser.peek(), "unexpected " + std::string(detail::describe(parser.peek().kind)));
    line_numbers.push_back(lines[i].number);
  }
  if (vocab) {
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      for (const auto& a : atoms_in_order({formulas[i]})) {
        if (!vocab->find(a)) throw ParseError(line_numbers[i], 1, "atom '" + a + "' is not declared in the vocab header");
      }
    }
  }
  return make_theory(std::move(formulas), std::move(vocab));
}

// Printing

namespace {

int precedence(Connective c) {
  switch (c) {
    case Connective::equivalence: return 1;
    case Connective::implication: return 2;
    case Connective::disjunction: return 3;
    case Connective::conjunction: return 4;
    case Connective::negation:
    case Connective::knows: return 5;
    default: return 6;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::atom: out += f.name(); break;
    case Connective::top: out += "true"; break;
    case Connective::bottom: out += "false"; break;
    case Connective::negation:
      out += '~';
      print(f.lhs(), 5, out);
      break;
    case Connective::knows:
      out += "K ";
      print(f.lhs(), 5, out);
      break;
    case Connective::conjunction:
      print(f.lhs(), 4, out);
      out += " & ";
      print(f.rhs(), 5, out);
      break;
    case Connective::disjunction:
      print(f.lhs(), 3, out);
      out += " | ";
      print(f.rhs(), 4, out);
      break;
    case Connective::implication:
      print(f.lhs(), 3, out);
      out += " -> ";
      print(f.rhs(), 2, out);
      break;
    case Connective::equivalence:
      print(f.lhs(), 2, out);
      out += " <-> ";
      print(f.rhs(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

std::string to_string(const Theory& t) {
  std::string out;
  if (t.vocabulary.names() != atoms_in_order(t.formulas)) {
    out += "vocab:";
    for (const auto& n : t.vocabulary.names()) out += " " + n;
    out += '\n';
  }
  for (const auto& f : t.formulas) out += to_string(f) + '\n';
  return out;
}

// Modal analysis

namespace {

void collect_modal(const Formula& f, std::vector<Formula>& out) {
  for (std::size_t i = 0; i < f.arity(); ++i) collect_modal(i == 0 ? f.lhs() : f.rhs(), out);
  if (f.kind() == Connective::knows) {
    const Formula& arg = f.lhs();
    if (std::find(out.begin(), out.end(), arg) == out.end()) out.push_back(arg);
  }
}

void polarities(const Formula& f, Polarity sign, std::size_t formula_index, std::vector<ModalOccurrence>& out,
                std::size_t& ordinal) {
  switch (f.kind()) {
    case Connective::knows:
      out.push_back({formula_index, ordinal++, f.lhs(), sign});
      polarities(f.lhs(), sign, formula_index, out, ordinal);
      break;
    case Connective::negation:
      polarities(f.lhs(), flip(sign), formula_index, out, ordinal);
      break;
    case Connective::implication:
      polarities(f.lhs(), flip(sign), formula_index, out, ordinal);
      polarities(f.rhs(), sign, formula_index, out, ordinal);
      break;
    case Connective::equivalence:
      polarities(f.lhs(), Polarity::both, formula_index, out, ordinal);
      polarities(f.rhs(), Polarity::both, formula_index, out, ordinal);
      break;
    case Connective::conjunction:
    case Connective::disjunction:
      polarities(f.lhs(), sign, formula_index, out, ordinal);
      polarities(f.rhs(), sign, formula_index, out, ordinal);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Formula> collect_modal_subformulas(const std::vector<Formula>& formulas) {
  std::vector<Formula> out;
  for (const auto& f : formulas) collect_modal(f, out);
  return out;
}

std::vector<Formula> collect_modal_subformulas(const Theory& t) { return collect_modal_subformulas(t.formulas); }

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::positive: return "positive";
    case Polarity::negative: return "negative";
    default: return "both";
  }
}

std::vector<ModalOccurrence> modal_polarities(const Theory& t) {
  std::vector<ModalOccurrence> out;
  for (std::size_t i = 0; i < t.formulas.size(); ++i) {
    std::size_t ordinal = 0;
    polarities(t.formulas[i], Polarity::positive, i, out, ordinal);
  }
  return out;
}

bool only_negative(const Theory& t) {
  const auto occ = modal_polarities(t);
  return std::all_of(occ.begin(), occ.end(), [](const ModalOccurrence& o) { return o.polarity == Polarity::negative; });
}

}  // namespace nmr
