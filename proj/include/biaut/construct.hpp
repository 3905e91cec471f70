#pragma once

#include <vector>

#include "biaut/bia.hpp"
#include "biaut/dfa.hpp"

namespace biaut {

/// Biautomaton state built from a state of the language DFA (left) and a
/// state of the reversed-language DFA (right).
struct PairState {
  StateId left;
  StateId right;

  bool operator==(const PairState&) const = default;
};

struct CrossProduct {
  Bia bia;
  /// pairs[q] is the origin of biautomaton state q.
  std::vector<PairState> pairs;
};

/// Cross-product biautomaton of a DFA for L and a DFA for the reversal of L.
/// Forward moves advance the left component, backward moves the right one;
/// (p, q) accepts iff u_p v_q^R is in L for shortest-lex representatives
/// u_p and v_q. Only the reachable part is returned; its size never exceeds
/// the product of the input sizes.
///
/// Throws AlphabetError on differing alphabets and PreconditionError (with a
/// witness word) if `reversed` does not accept the reversal of `language`.
CrossProduct cross_product(const Dfa& language, const Dfa& reversed);

/// Quotient by right-language equivalence, refined over forward and
/// backward transitions, in canonical BFS numbering. The result is
/// revalidated.
Bia minimize_bia(const Bia& bia);

/// Reachable part renumbered in canonical BFS order.
Bia canonical_bia(const Bia& bia);

/// Minimal biautomaton of L(dfa). Raises ConsistencyError if the embedded
/// forward or backward DFA of the result is not minimal.
Bia minimal_bia_of(const Dfa& dfa);

bool bia_isomorphic(const Bia& lhs, const Bia& rhs);

}  // namespace biaut
