#pragma once

#include <string_view>

namespace nmr {

// Three truth values, ordered f < u < t for the Kleene connectives.
enum class TruthValue { f = 0, u = 1, t = 2 };

constexpr TruthValue kleene_not(TruthValue v) {
  switch (v) {
    case TruthValue::t: return TruthValue::f;
    case TruthValue::f: return TruthValue::t;
    default: return TruthValue::u;
  }
}

constexpr TruthValue kleene_and(TruthValue a, TruthValue b) { return a < b ? a : b; }
constexpr TruthValue kleene_or(TruthValue a, TruthValue b) { return a < b ? b : a; }
constexpr TruthValue kleene_implies(TruthValue a, TruthValue b) {
  return kleene_or(kleene_not(a), b);
}
constexpr TruthValue kleene_iff(TruthValue a, TruthValue b) {
  return kleene_and(kleene_implies(a, b), kleene_implies(b, a));
}

constexpr TruthValue from_bool(bool b) { return b ? TruthValue::t : TruthValue::f; }

// Precision order: u is below both t and f.
constexpr bool leq_p(TruthValue a, TruthValue b) { return a == TruthValue::u || a == b; }

constexpr std::string_view to_string(TruthValue v) {
  switch (v) {
    case TruthValue::t: return "t";
    case TruthValue::f: return "f";
    default: return "u";
  }
}

}  // namespace nmr
