#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "biaut/alphabet.hpp"

namespace biaut {

/// Default cap on the number of states produced by subset constructions.
inline constexpr std::size_t kDefaultStateCap = 4096;

/// Complete deterministic finite automaton. States are 0..n-1 and the
/// transition table is total; the constructor rejects anything else.
class Dfa {
 public:
  /// `delta[q * alphabet.size() + a]` is the successor of `q` on symbol `a`.
  Dfa(Alphabet alphabet, std::size_t num_states, StateId initial, std::vector<bool> accepting,
      std::vector<StateId> delta);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return num_states_; }
  std::size_t num_symbols() const { return alphabet_.size(); }
  StateId initial() const { return initial_; }
  bool is_accepting(StateId q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const { return accepting_; }
  const std::vector<StateId>& table() const { return delta_; }

  StateId next(StateId q, std::size_t symbol) const { return delta_[q * alphabet_.size() + symbol]; }

  /// Extended transition function. Throws AlphabetError on foreign symbols.
  StateId read(StateId q, std::string_view word) const;

  /// True iff every outgoing transition of `q` is a self-loop.
  bool is_sink(StateId q) const;

  bool operator==(const Dfa&) const = default;

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  StateId initial_;
  std::vector<bool> accepting_;
  std::vector<StateId> delta_;
};

struct RunResult {
  StateId state;
  bool accepted;
};

RunResult run_dfa(const Dfa& dfa, std::string_view word);
inline bool accepts(const Dfa& dfa, std::string_view word) { return run_dfa(dfa, word).accepted; }

/// Restricts to reachable states and renumbers them in BFS order from the
/// initial state, expanding symbols in alphabet order.
Dfa canonical_dfa(const Dfa& dfa);

/// Minimal complete DFA in canonical BFS numbering (Moore refinement).
Dfa minimize_dfa(const Dfa& dfa);

/// Minimal DFA of the reversed language, via subset construction on the
/// reversed transition relation. Throws CapError past `state_cap` subsets.
Dfa reverse_dfa(const Dfa& dfa, std::size_t state_cap = kDefaultStateCap);

Dfa complement_dfa(const Dfa& dfa);

/// True iff the reachable parts are isomorphic.
bool dfa_isomorphic(const Dfa& lhs, const Dfa& rhs);

enum class EquivalenceStatus { equal, first_minus_second, second_minus_first };

struct EquivalenceResult {
  EquivalenceStatus status;
  /// Shortest (then alphabet-lexicographically least) word in the symmetric
  /// difference; empty when `status == equal`.
  Word witness;
};

/// Throws AlphabetError if the alphabets differ.
EquivalenceResult product_status(const Dfa& first, const Dfa& second);

enum class FinitenessKind { finite, cofinite, infinite_coinfinite };

struct Finiteness {
  FinitenessKind kind;
  /// Finite languages: length of the longest accepted word (nullopt for the
  /// empty language).
  std::optional<std::size_t> longest_accepted;
  /// Co-finite languages: length of the longest rejected word (nullopt for
  /// the full language).
  std::optional<std::size_t> longest_rejected;
};

Finiteness finiteness(const Dfa& dfa);

/// Shortest word reaching `state`, ties broken by alphabet order. Throws
/// PreconditionError if the state is unreachable.
Word representative_word(const Dfa& dfa, StateId state);

/// Representative words of all states at once; nullopt for unreachable ones.
std::vector<std::optional<Word>> representative_words(const Dfa& dfa);

}  // namespace biaut
