#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace biaut {

using StateId = std::uint32_t;

/// Words are strings of single-character symbols. The empty string is the
/// empty word.
using Word = std::string;

/// Ordered set of single-character symbols. The declaration order is the
/// order used for BFS numbering, representative words and lexicographic
/// comparison everywhere in the library.
class Alphabet {
 public:
  Alphabet() { index_.fill(-1); }

  /// Throws AlphabetError on an empty list, duplicates or whitespace symbols.
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const { return symbols_; }

  std::optional<std::size_t> index_of(char c) const {
    auto i = index_[static_cast<unsigned char>(c)];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }
  bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }

  /// Index of `c`, or AlphabetError naming the offending symbol.
  std::size_t require(char c) const;

  /// Throws AlphabetError unless every symbol of `word` is in the alphabet.
  void check_word(std::string_view word) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// Lexicographic order by alphabet index; a proper prefix is smaller.
inline bool lex_less(const Alphabet& alphabet, std::string_view lhs, std::string_view rhs) {
  for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i) {
    std::size_t a = alphabet.require(lhs[i]), b = alphabet.require(rhs[i]);
    if (a != b) return a < b;
  }
  return lhs.size() < rhs.size();
}

enum class Direction : std::uint8_t { forward, backward };

/// One letter map of an automaton: a symbol read by a given head.
struct Letter {
  std::size_t symbol = 0;
  Direction dir = Direction::forward;

  bool operator==(const Letter&) const = default;
};

inline const char* direction_name(Direction d) { return d == Direction::forward ? "fwd" : "bwd"; }

}  // namespace biaut
