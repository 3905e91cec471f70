#pragma once

// Internal: nondeterministic automaton with epsilon moves and its subset
// construction. Used by regex compilation and reversal.

#include <cstddef>
#include <vector>

#include "biaut/dfa.hpp"

namespace biaut::detail {

struct Nfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  std::vector<StateId> initial;
  std::vector<bool> accepting;
  /// succ[q * |alphabet| + a] lists the a-successors of q.
  std::vector<std::vector<StateId>> succ;
  std::vector<std::vector<StateId>> eps;

  Nfa(Alphabet sigma, std::size_t n)
      : alphabet(std::move(sigma)), num_states(n), accepting(n, false), succ(n * alphabet.size()), eps(n) {}

  void add(StateId from, std::size_t symbol, StateId to) { succ[from * alphabet.size() + symbol].push_back(to); }
};

/// Complete DFA over the reachable subsets (the empty subset acts as sink).
/// Throws CapError if more than `cap` subsets are reachable.
Dfa determinize(const Nfa& nfa, std::size_t cap);

}  // namespace biaut::detail
