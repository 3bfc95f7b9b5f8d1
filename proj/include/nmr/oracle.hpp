#pragma once

// Brute-force reference implementations. They share no evaluation code with
// the solver: formulas are interpreted directly from the syntax tree.

#include <cstddef>
#include <vector>

#include "nmr/operators.hpp"
#include "nmr/worlds.hpp"

namespace nmr::oracle {

struct OracleBudget {
  // Candidate enumeration over all 2^(2^n) belief states only when n <= max_atoms.
  std::size_t max_atoms = 4;
};

// Every b with D_T(b) = b, by testing all subsets of W.
std::vector<BeliefState> brute_expansions(const OperatorContext& ctx, const OracleBudget& budget = {});

// Every b reproduced by its own stable derivation, by testing all subsets of W.
std::vector<BeliefState> brute_stable(const OperatorContext& ctx, const OracleBudget& budget = {});

// Well-founded fixpoint by alternating stable revisions (x, y) -> (S(y), S(x))
// from (W, empty), where S(y) iterates z -> { w : T is not false in (z, y) }
// from W. Raw pairs are evaluated as a bilattice product: K is checked for
// truth over the first coordinate and for falsity over the second. Throws
// InternalError if the iteration does not converge or its limit is
// inconsistent.
PartialBeliefState algebraic_wf(const OperatorContext& ctx, const OracleBudget& budget = {});

}  // namespace nmr::oracle
