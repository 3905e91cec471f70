#pragma once

// Brute-force ground truth by exhaustive word enumeration. Every verdict here
// is bounded: it speaks only about words up to the table bound.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biaut/bia.hpp"
#include "biaut/dfa.hpp"

namespace biaut {

/// Upper limit on the number of words (all lengths together) an enumeration
/// may visit; 14 over a binary alphabet is the largest admissible bound.
inline constexpr std::size_t kMaxEnumeratedWords = 32767;

/// All words of exactly `length` symbols in lexicographic order.
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t length);

/// Throws CapError if enumerating all words up to `bound` exceeds the guard.
void check_enumeration_guard(const Alphabet& alphabet, std::size_t bound);

struct WordTable {
  Alphabet alphabet;
  std::size_t bound = 0;
  /// accepted[n] lists the accepted words of length n in lexicographic order.
  std::vector<std::vector<Word>> accepted;

  bool contains(std::string_view w) const;
  std::size_t size() const;
  /// All accepted words in length-lex order.
  std::vector<Word> words() const;
};

WordTable enumerate(const Alphabet& alphabet, std::size_t bound, const std::function<bool(std::string_view)>& member);
WordTable enumerate(const Dfa& dfa, std::size_t bound);
WordTable enumerate(const Bia& bia, std::size_t bound);

struct TableComparison {
  bool equal = true;
  /// Length-lex first word in exactly one table.
  std::optional<Word> word;
  bool in_first = false;
};

/// Throws PreconditionError if bounds or alphabets differ.
TableComparison tables_equal(const WordTable& first, const WordTable& second);

enum class FixKind { circumfix, prefix, suffix };

/// Bounded freeness check. `pair` is (longer, shorter) with `shorter` a
/// circumfix (prefix, suffix) of `longer`; the length-lex first `longer`
/// with its length-lex first partner.
struct BoundedPairVerdict {
  bool holds = true;
  std::size_t bound = 0;
  std::optional<std::pair<Word, Word>> pair;
};

BoundedPairVerdict fix_free_up_to(const WordTable& table, FixKind kind);
inline BoundedPairVerdict circumfix_free_up_to(const WordTable& table) {
  return fix_free_up_to(table, FixKind::circumfix);
}

/// Smallest k <= k_max such that all words of length >= k (up to the table
/// bound) that share their last k letters agree on membership. Shorter words
/// are exempt. Throws PreconditionError unless bound >= k_max + 2.
std::optional<std::size_t> definite_up_to(const WordTable& table, std::size_t k_max);

/// One accepted word per line prefixed by `+`, \e for the empty word,
/// preceded by a `# bound: n` comment.
std::string dump_table(const WordTable& table);

}  // namespace biaut
