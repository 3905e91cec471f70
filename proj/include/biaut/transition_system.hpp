#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "biaut/bia.hpp"
#include "biaut/dfa.hpp"

namespace biaut {

/// A DFA or biautomaton viewed as a set of letter maps on 0..n-1. A DFA
/// contributes one forward map per symbol; a biautomaton contributes a
/// forward and a backward map per symbol, interleaved in that order.
/// Structural checks that treat both kinds of automata uniformly are written
/// against this view.
struct TransitionSystem {
  Alphabet alphabet;
  std::size_t num_states = 0;
  StateId initial = 0;
  std::vector<bool> accepting;
  bool two_way = false;
  std::vector<Letter> letters;
  std::vector<std::vector<StateId>> maps;

  TransitionSystem(const Dfa& dfa);  // NOLINT(google-explicit-constructor)
  TransitionSystem(const Bia& bia);  // NOLINT(google-explicit-constructor)

  std::size_t map_index(Letter l) const { return two_way ? 2 * l.symbol + (l.dir == Direction::backward) : l.symbol; }
  const std::vector<StateId>& map(Letter l) const { return maps[map_index(l)]; }

  /// Every letter map fixes `q`.
  bool is_sink(StateId q) const;

  /// Image of `q` under (q . u) o v; `v` must be empty for one-way systems.
  StateId apply(StateId q, std::string_view u, std::string_view v) const;
};

/// Human-readable letter, e.g. `a` for a DFA or `a/fwd` for a biautomaton.
std::string letter_name(const TransitionSystem& sys, Letter l);

}  // namespace biaut
