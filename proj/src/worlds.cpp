#include "nmr/worlds.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "nmr/errors.hpp"

namespace nmr {

namespace {

std::size_t word_count(std::size_t atoms) {
  const std::size_t universe = std::size_t{1} << atoms;
  return (universe + 63) / 64;
}

std::uint64_t tail_mask(std::size_t atoms) {
  const std::size_t universe = std::size_t{1} << atoms;
  const std::size_t rem = universe % 64;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

}  // namespace

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  if (name == "K" || name == "M" || name == "true" || name == "false") return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c); });
}

Vocabulary::Vocabulary(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_valid_atom_name(n)) throw std::invalid_argument("invalid atom name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate atom '" + n + "'");
  }
}

std::optional<std::size_t> Vocabulary::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

// WorldSet

WorldSet::WorldSet(std::size_t atoms) : atoms_(atoms) {
  // 32-bit world indices.
  if (atoms > 31) throw ResourceCapError("vocabulary of " + std::to_string(atoms) + " atoms is too large");
  words_.assign(word_count(atoms), 0);
}

WorldSet WorldSet::full(std::size_t atoms) {
  WorldSet s(atoms);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.words_.back() &= tail_mask(atoms);
  return s;
}

WorldSet WorldSet::of(std::size_t atoms, std::initializer_list<std::uint32_t> indices) {
  WorldSet s(atoms);
  for (auto i : indices) s.insert(World(i));
  return s;
}

WorldSet WorldSet::from_worlds(std::size_t atoms, const std::vector<World>& worlds) {
  WorldSet s(atoms);
  for (auto w : worlds) s.insert(w);
  return s;
}

void WorldSet::check_world(World w) const {
  if (w.index() >= universe_size())
    throw VocabularyMismatch("world index " + std::to_string(w.index()) + " outside a " +
                             std::to_string(atoms_) + "-atom vocabulary");
}

void WorldSet::check_same_universe(const WorldSet& other) const {
  if (atoms_ != other.atoms_)
    throw VocabularyMismatch("world sets over " + std::to_string(atoms_) + " and " +
                             std::to_string(other.atoms_) + " atoms");
}

bool WorldSet::contains(World w) const {
  check_world(w);
  return (words_[w.index() / 64] >> (w.index() % 64)) & 1u;
}

void WorldSet::insert(World w) {
  check_world(w);
  words_[w.index() / 64] |= std::uint64_t{1} << (w.index() % 64);
}

void WorldSet::erase(World w) {
  check_world(w);
  words_[w.index() / 64] &= ~(std::uint64_t{1} << (w.index() % 64));
}

std::size_t WorldSet::size() const {
  std::size_t n = 0;
  for (auto word : words_) n += static_cast<std::size_t>(std::popcount(word));
  return n;
}

bool WorldSet::is_empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool WorldSet::is_subset_of(const WorldSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<World> WorldSet::worlds() const {
  std::vector<World> out;
  out.reserve(size());
  for_each([&](World w) { out.push_back(w); });
  return out;
}

WorldSet& WorldSet::operator&=(const WorldSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

WorldSet& WorldSet::operator|=(const WorldSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

WorldSet& WorldSet::operator-=(const WorldSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const WorldSet& a, const WorldSet& b) {
  if (auto c = a.atoms_ <=> b.atoms_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// PartialBeliefState

PartialBeliefState::PartialBeliefState(WorldSet pp, WorldSet cp) : pp_(std::move(pp)), cp_(std::move(cp)) {
  if (pp_.atom_count() != cp_.atom_count()) throw VocabularyMismatch("pp and cp over different vocabularies");
  if (!cp_.is_subset_of(pp_)) throw InternalError("inconsistent partial belief state: cp is not a subset of pp");
}

PartialBeliefState PartialBeliefState::bottom(std::size_t atoms) {
  return {WorldSet::full(atoms), WorldSet::empty(atoms)};
}

TruthValue PartialBeliefState::status(World w) const {
  if (cp_.contains(w)) return TruthValue::t;
  if (!pp_.contains(w)) return TruthValue::f;
  return TruthValue::u;
}

std::strong_ordering operator<=>(const PartialBeliefState& a, const PartialBeliefState& b) {
  if (auto c = a.pp_ <=> b.pp_; c != 0) return c;
  return a.cp_ <=> b.cp_;
}

// Operations

void check_atom_cap(std::size_t atoms, std::size_t max_atoms) {
  if (atoms > max_atoms)
    throw ResourceCapError("vocabulary has " + std::to_string(atoms) + " atoms; the cap is " +
                           std::to_string(max_atoms));
}

BeliefState enumerate_worlds(const Vocabulary& v, std::size_t max_atoms) {
  check_atom_cap(v.size(), max_atoms);
  return WorldSet::full(v.size());
}

PartialBeliefState bottom_p(const Vocabulary& v) { return PartialBeliefState::bottom(v.size()); }

bool leq_k(const BeliefState& b1, const BeliefState& b2) { return b2.is_subset_of(b1); }

bool leq_p(const PartialBeliefState& p1, const PartialBeliefState& p2) {
  return p2.pp().is_subset_of(p1.pp()) && p1.cp().is_subset_of(p2.cp());
}

std::vector<std::string> true_atoms(const Vocabulary& v, World w) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (w.holds(k)) out.push_back(v.name(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_world(const Vocabulary& v, World w) {
  const auto atoms = true_atoms(v, w);
  if (atoms.empty()) return "∅";
  std::string s = "{";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) s += ",";
    s += atoms[i];
  }
  return s + "}";
}

std::string format_belief_state(const Vocabulary& v, const BeliefState& b) {
  std::string s = "{";
  bool first = true;
  b.for_each([&](World w) {
    if (!first) s += ", ";
    first = false;
    s += format_world(v, w);
  });
  return s + "}";
}

std::string format_partial(const Vocabulary& v, const PartialBeliefState& p) {
  return "(" + format_belief_state(v, p.pp()) + ", " + format_belief_state(v, p.cp()) + ")";
}

}  // namespace nmr
