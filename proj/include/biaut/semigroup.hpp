#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biaut/bia.hpp"
#include "biaut/transition_system.hpp"

namespace biaut {

inline constexpr std::size_t kDefaultSemigroupCap = 100000;

/// A total self-map of 0..n-1 together with a shortest sequence of letter
/// maps that produces it, in application order.
struct Transformation {
  std::vector<StateId> image;
  std::vector<Letter> provenance;
};

/// The transition semigroup generated by the letter maps of an automaton.
/// Contains no adjoined identity: every element comes from a non-empty word.
struct Semigroup {
  std::vector<Transformation> generators;
  std::vector<Transformation> elements;
  /// Closure was stopped at the element cap; `elements` is incomplete.
  bool capped = false;
};

Semigroup semigroup_of(const TransitionSystem& sys, std::size_t cap = kDefaultSemigroupCap);

/// Splits a provenance into the forward word u and backward word v with
/// map = q |-> (q . u) o v. Valid for biautomata by the diamond property.
std::pair<Word, Word> split_provenance(const Alphabet& alphabet, const std::vector<Letter>& provenance);

struct StableRank {
  std::size_t rank;
  /// Sorted; the map restricted to it is a permutation of it.
  std::vector<StateId> stable_image;
};

StableRank stable_rank(std::span<const StateId> image);

/// Two distinct states sent to the same state by one letter map.
struct Collision {
  StateId p;
  StateId q;
  Letter letter;
  StateId target;
};

struct PermutationVerdict {
  bool holds;
  std::optional<Collision> collision;
};

/// Every letter map (both functions of a biautomaton) is injective.
PermutationVerdict is_permutation(const TransitionSystem& sys);
inline PermutationVerdict is_permutation_dfa(const Dfa& dfa) { return is_permutation(dfa); }
inline PermutationVerdict is_permutation_bia(const Bia& bia) { return is_permutation(bia); }

/// The map q |-> (q . u) o v permutes `subset`, sending subset[i] to
/// mapping[i]. `trivial` is set when that permutation is the identity.
struct PermutationEvidence {
  std::vector<StateId> subset;
  Word u;
  Word v;
  std::vector<StateId> mapping;
  bool trivial = false;
};

struct PermutationFreeVerdict {
  bool holds;
  std::optional<PermutationEvidence> evidence;
};

/// No element of the transition semigroup acts as a non-trivial permutation
/// on any subset (aperiodicity). Throws CapError if the semigroup is capped.
PermutationFreeVerdict is_permutation_free(const TransitionSystem& sys, std::size_t cap = kDefaultSemigroupCap);

/// No element coming from a non-empty word permutes a subset of two or more
/// states, identity included. Throws CapError if the semigroup is capped.
PermutationFreeVerdict is_strongly_permutation_free(const TransitionSystem& sys,
                                                    std::size_t cap = kDefaultSemigroupCap);

/// Re-applies the evidence to `sys` and checks that it describes a
/// permutation of its subset with the stated triviality.
bool evidence_replays(const TransitionSystem& sys, const PermutationEvidence& evidence);

/// A word w and states cycle[0..k-1] with cycle[i+1 mod k] = (cycle[i] . u_i) o v_i
/// where u_i is the first splits[i] symbols of w and v_i the rest.
struct WordCycle {
  Word word;
  std::vector<StateId> cycle;
  std::vector<std::size_t> splits;
};

/// Length-lex search over non-empty words up to `max_word_len` for the first
/// word whose split relation has a simple cycle of length at least
/// `min_cycle_len`. Reports the shortest such cycle. nullopt means none was
/// found up to the bound.
std::optional<WordCycle> find_word_cycle(const Bia& bia, std::size_t max_word_len, std::size_t min_cycle_len = 2);

/// As WordCycle, but every symbol of w is read by a freely chosen head:
/// heads[i][j] is the head that reads symbol j on the step from cycle[i].
struct GraphCycle {
  Word word;
  std::vector<StateId> cycle;
  std::vector<std::vector<Direction>> heads;
};

std::optional<GraphCycle> find_graph_cycle(const Bia& bia, std::size_t max_word_len, std::size_t min_cycle_len = 2);

enum class LemmaFactor { first, second };

/// `factor`^`exponent` is a non-trivial permutation of `subset`.
struct LemmaWitness {
  std::size_t exponent;
  LemmaFactor factor;
  std::vector<StateId> subset;
};

/// Given commuting maps pi1 and pi2 whose composite non-trivially permutes
/// `subset`, finds a power of one factor that non-trivially permutes some
/// set. Throws PreconditionError if the maps do not commute or the
/// composite does not non-trivially permute `subset`.
LemmaWitness permutation_lemma_check(std::span<const StateId> pi1, std::span<const StateId> pi2,
                                     std::span<const StateId> subset);

/// Image of `subset` under map^exponent, in subset order.
std::vector<StateId> apply_power(std::span<const StateId> map, std::size_t exponent, std::span<const StateId> subset);

/// `mapping` (image of subset[i] at position i) is a bijection of `subset`.
bool is_permutation_of(std::span<const StateId> subset, std::span<const StateId> mapping);

}  // namespace biaut
