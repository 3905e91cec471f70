#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "biaut/dfa.hpp"

namespace biaut {

/// Regular expression syntax tree. Leaves have no children, star and
/// complement exactly one, alternation and concatenation exactly two.
struct RegexAst {
  enum class Kind { empty_set, empty_word, symbol, alternation, concatenation, star, complement };

  Kind kind = Kind::empty_set;
  char symbol = '\0';
  std::vector<RegexAst> children;

  static RegexAst empty_set() { return {Kind::empty_set, '\0', {}}; }
  static RegexAst empty_word() { return {Kind::empty_word, '\0', {}}; }
  static RegexAst letter(char c) { return {Kind::symbol, c, {}}; }
  static RegexAst alternation(RegexAst l, RegexAst r) { return binary(Kind::alternation, std::move(l), std::move(r)); }
  static RegexAst concatenation(RegexAst l, RegexAst r) { return binary(Kind::concatenation, std::move(l), std::move(r)); }
  static RegexAst star(RegexAst e) { return unary(Kind::star, std::move(e)); }
  static RegexAst complement(RegexAst e) { return unary(Kind::complement, std::move(e)); }

  bool operator==(const RegexAst&) const = default;

 private:
  static RegexAst binary(Kind k, RegexAst l, RegexAst r) {
    RegexAst n{k, '\0', {}};
    n.children.push_back(std::move(l));
    n.children.push_back(std::move(r));
    return n;
  }
  static RegexAst unary(Kind k, RegexAst e) {
    RegexAst n{k, '\0', {}};
    n.children.push_back(std::move(e));
    return n;
  }
};

/// Parses the expression syntax
///
///   `|` union, juxtaposition concatenation, postfix `*`, prefix `~`
///   (complement w.r.t. `alphabet`), `( )` grouping, `\e` empty word,
///   `\0` empty set.
///
/// Precedence from tightest: complement, star, concatenation, union; binary
/// operators associate to the left. Whitespace between tokens is ignored.
/// Throws ParseError with a 1-based column.
RegexAst parse_regex(std::string_view text, const Alphabet& alphabet);

/// Minimal complete DFA of the expression. Throws CapError if an
/// intermediate automaton exceeds `state_cap` states.
Dfa regex_to_dfa(const RegexAst& ast, const Alphabet& alphabet, std::size_t state_cap = kDefaultStateCap);

inline Dfa compile_regex(std::string_view text, const Alphabet& alphabet) {
  return regex_to_dfa(parse_regex(text, alphabet), alphabet);
}

/// Fully parenthesised rendering, mainly for diagnostics.
std::string to_string(const RegexAst& ast);

}  // namespace biaut
