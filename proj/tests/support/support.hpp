#pragma once

// Shared fixtures and independent reference implementations for the tests.
// Nothing here calls the library's decision procedures; the oracles are
// written directly from the definitions.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "biaut/bia.hpp"
#include "biaut/dfa.hpp"
#include "biaut/regex.hpp"

namespace support {

using biaut::Alphabet;
using biaut::Bia;
using biaut::Dfa;
using biaut::StateId;
using biaut::Word;

inline constexpr std::uint32_t kSeed = 20140917;

struct Language {
  std::string name;
  Dfa dfa;
};

/// Regex, alphabet pairs of the worked-example languages.
struct WorkedLanguage {
  std::string name;
  std::string regex;
};
const std::vector<WorkedLanguage>& worked_regexes();

/// The eight worked-example languages over {a, b}, as minimal DFAs.
std::vector<Language> worked_languages();
/// `count` random minimal DFAs with at most `max_states` states over {a, b}.
std::vector<Language> random_languages(std::size_t count, std::size_t max_states = 5, std::uint32_t seed = kSeed);
/// The 38-language sample set: the worked-example languages followed by 30 random
/// minimal DFAs.
std::vector<Language> sample_languages();

/// Random complete DFA (not minimized, possibly with unreachable states).
Dfa random_dfa(std::mt19937& rng, std::size_t num_states, const Alphabet& alphabet, double accept_probability = 0.4);
/// Random DFA whose letter maps are permutations.
Dfa random_permutation_dfa(std::mt19937& rng, std::size_t num_states, const Alphabet& alphabet);
/// An equivalent DFA with every state split into two copies and transitions
/// routed to a random copy, then restricted to reachable states.
Dfa blow_up(const Dfa& dfa, std::mt19937& rng);

/// Membership by direct interpretation of the syntax tree.
bool regex_member(const biaut::RegexAst& ast, std::string_view word);

/// All words up to `bound` in length-lex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t bound);

/// Every distinct map q -> (q . u) o v (or q -> q . w for a DFA) induced by a
/// non-empty word, found by breadth-first composition.
std::set<std::vector<StateId>> word_maps(const Dfa& dfa);
std::set<std::vector<StateId>> word_maps(const Bia& bia);

/// Some map moves a state around a cycle of length >= 2 (definition of a
/// non-trivial permutation on an orbit).
bool naive_has_nontrivial_permutation(const std::set<std::vector<StateId>>& maps);
/// Some map permutes a set of at least two states (its cyclic states).
bool naive_has_large_permutation(const std::set<std::vector<StateId>>& maps);

/// Finite (co-finite) by the pumping bound: no accepted (rejected) word with
/// length in [n, 2n) for an n-state DFA.
bool naive_finite(const Dfa& dfa);
bool naive_cofinite(const Dfa& dfa);

/// Definite by checking that no pair of distinct states survives every
/// word: the unordered pair graph off the diagonal is acyclic.
bool naive_definite(const Dfa& dfa);

}  // namespace support
