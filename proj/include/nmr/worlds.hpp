#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmr/truth_value.hpp"

namespace nmr {

inline constexpr std::size_t kDefaultMaxAtoms = 20;

// Ordered, duplicate-free list of atom names. Atom k is bit k of a world index.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t atom) const { return names_.at(atom); }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> names_;
};

bool is_valid_atom_name(std::string_view name);

// One interpretation of a vocabulary, identified by its canonical index.
class World {
 public:
  constexpr World() = default;
  constexpr explicit World(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool holds(std::size_t atom) const { return (index_ >> atom) & 1u; }

  friend constexpr auto operator<=>(World, World) = default;

 private:
  std::uint32_t index_ = 0;
};

// Set of worlds over a vocabulary of `atom_count()` atoms, stored as a bitset
// over the 2^n canonical indices.
class WorldSet {
 public:
  WorldSet() : WorldSet(0) {}

  static WorldSet empty(std::size_t atoms) { return WorldSet(atoms); }
  static WorldSet full(std::size_t atoms);
  static WorldSet of(std::size_t atoms, std::initializer_list<std::uint32_t> indices);
  static WorldSet from_worlds(std::size_t atoms, const std::vector<World>& worlds);

  std::size_t atom_count() const { return atoms_; }
  std::size_t universe_size() const { return std::size_t{1} << atoms_; }

  bool contains(World w) const;
  void insert(World w);
  void erase(World w);

  std::size_t size() const;
  bool is_empty() const;
  bool is_subset_of(const WorldSet& other) const;
  std::vector<World> worlds() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t word = words_[i];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        f(World(static_cast<std::uint32_t>(i * 64 + bit)));
        word &= word - 1;
      }
    }
  }

  WorldSet& operator&=(const WorldSet& other);
  WorldSet& operator|=(const WorldSet& other);
  WorldSet& operator-=(const WorldSet& other);
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend WorldSet operator-(WorldSet a, const WorldSet& b) { return a -= b; }

  friend bool operator==(const WorldSet&, const WorldSet&) = default;

  // Canonical order: the bitset read as a binary number (sum of 2^index).
  friend std::strong_ordering operator<=>(const WorldSet& a, const WorldSet& b);

 private:
  explicit WorldSet(std::size_t atoms);
  void check_same_universe(const WorldSet& other) const;
  void check_world(World w) const;

  std::size_t atoms_;
  std::vector<std::uint64_t> words_;
};

// A total possible-world set B.
using BeliefState = WorldSet;

// A consistent pair (PP, CP) with CP a subset of PP. World status: t in CP,
// f outside PP, u otherwise.
class PartialBeliefState {
 public:
  PartialBeliefState(WorldSet pp, WorldSet cp);

  static PartialBeliefState bottom(std::size_t atoms);
  static PartialBeliefState total(const BeliefState& b) { return {b, b}; }

  const WorldSet& pp() const { return pp_; }
  const WorldSet& cp() const { return cp_; }
  WorldSet unknown() const { return pp_ - cp_; }
  std::size_t atom_count() const { return pp_.atom_count(); }

  bool is_total() const { return pp_ == cp_; }
  TruthValue status(World w) const;

  friend bool operator==(const PartialBeliefState&, const PartialBeliefState&) = default;
  friend std::strong_ordering operator<=>(const PartialBeliefState& a,
                                          const PartialBeliefState& b);

 private:
  WorldSet pp_;
  WorldSet cp_;
};

// All 2^n worlds. Throws ResourceCapError when n exceeds max_atoms.
BeliefState enumerate_worlds(const Vocabulary& v, std::size_t max_atoms = kDefaultMaxAtoms);
void check_atom_cap(std::size_t atoms, std::size_t max_atoms);

PartialBeliefState bottom_p(const Vocabulary& v);

// b1 <=k b2 iff b2 is a subset of b1.
bool leq_k(const BeliefState& b1, const BeliefState& b2);
// p1 <=p p2 iff pp1 contains pp2 and cp1 is contained in cp2.
bool leq_p(const PartialBeliefState& p1, const PartialBeliefState& p2);

// Alphabetically sorted names of the atoms true in w.
std::vector<std::string> true_atoms(const Vocabulary& v, World w);
// "{P,Q}", or "∅" for the empty world.
std::string format_world(const Vocabulary& v, World w);
// "{∅, {P}}"; worlds in canonical index order.
std::string format_belief_state(const Vocabulary& v, const BeliefState& b);
// "({...}, {...})"
std::string format_partial(const Vocabulary& v, const PartialBeliefState& p);

}  // namespace nmr
