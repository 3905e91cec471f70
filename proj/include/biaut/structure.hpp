#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biaut/bia.hpp"
#include "biaut/dfa.hpp"
#include "biaut/transition_system.hpp"

namespace biaut {

enum class SinkAllowance { non_accepting, accepting, both };

/// `cycle` lists the states of a cycle; letters[i] labels the edge from
/// cycle[i] to cycle[i+1 mod k]. Empty when the property holds.
struct CycleVerdict {
  bool holds = true;
  std::vector<StateId> cycle;
  std::vector<Letter> letters;
};

/// No cycle and no self-loop remains after deleting the sinks of the allowed
/// kind(s).
CycleVerdict is_acyclic(const TransitionSystem& sys, SinkAllowance allowed);

/// Every cycle is a self-loop (all strongly connected components are
/// singletons).
CycleVerdict is_partially_ordered(const TransitionSystem& sys);

inline constexpr std::size_t kOrderSearchCap = 12;

/// States from least to greatest.
using OrderWitness = std::vector<StateId>;

/// A total order on the states for which every letter map is monotone.
/// nullopt when none exists. Throws CapError above `cap` states.
std::optional<OrderWitness> find_total_order(const TransitionSystem& sys, std::size_t cap = kOrderSearchCap);

/// `order` is a permutation of the states and every letter map is monotone
/// with respect to it.
bool certifies_order(const TransitionSystem& sys, const OrderWitness& order);

struct OrderedBia {
  Bia bia;
  OrderWitness order;
  /// Per state: "(u,v)" with \e for the empty word, or "s" for the sink.
  std::vector<std::string> labels;
};

/// Biautomaton on word pairs (u, v) with |uv| <= l plus a non-accepting sink,
/// where l is the longest input word (0 for no words). States are numbered
/// in their order (total length, |u|, u, v), sink last, so `order` is the
/// identity. With `complement`, acceptance is flipped on every state.
OrderedBia build_ordered_bia_finite(const std::vector<Word>& words, const Alphabet& alphabet, bool complement = false,
                                    std::size_t state_cap = kDefaultStateCap);

/// Lexicographic order induced by the alphabet order; a proper prefix is
/// smaller.
std::strong_ordering lex_compare(std::string_view lhs, std::string_view rhs, const Alphabet& alphabet);

struct TransitionRef {
  StateId from;
  Letter letter;
  StateId to;
};

struct TransitionVerdict {
  bool holds = true;
  std::optional<TransitionRef> offending;
};

/// Every transition leaving an accepting state enters a non-accepting sink.
TransitionVerdict is_non_exiting(const TransitionSystem& sys);
/// No transition enters the initial state.
TransitionVerdict is_non_returning(const TransitionSystem& sys);

/// For a DFA: reading a then b from `state` differs from reading b then a.
/// For a biautomaton a == b, and fwd(state, a) != bwd(state, a).
struct CommutationViolation {
  StateId state;
  std::size_t a;
  std::size_t b;
};

struct CommutativityVerdict {
  bool holds = true;
  std::optional<CommutationViolation> violation;
};

CommutativityVerdict is_commutative(const Dfa& dfa);
CommutativityVerdict is_commutative(const Bia& bia);

/// For every state p some power t^k(p), k > 0, equals q, where t = (. w).
/// Throws PreconditionError for an empty word.
bool is_w_attractor(const Dfa& dfa, std::string_view w, StateId q);
/// Same for t(p) = (p . u) o v; uv must be non-empty.
bool is_uv_attractor(const Bia& bia, std::string_view u, std::string_view v, StateId q);

/// The right languages of p and q differ on finitely many words. Uses
/// forward transitions only, which determine right languages of
/// biautomata as well.
bool almost_equivalent(const TransitionSystem& sys, StateId p, StateId q);

struct PairVerdict {
  bool holds = true;
  std::optional<std::pair<StateId, StateId>> pair;
};

/// All states pairwise almost-equivalent; the first failing pair otherwise.
PairVerdict all_states_almost_equivalent(const TransitionSystem& sys);

/// Smallest k such that every word of length k sends all states to one
/// state; nullopt if no such k exists.
std::optional<std::size_t> synchronizing_depth(const Dfa& dfa);

}  // namespace biaut
