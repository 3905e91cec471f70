#include "biaut/regex.hpp"

#include <cctype>

#include "biaut/error.hpp"
#include "subset.hpp"

namespace biaut {

namespace {

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  RegexAst parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    RegexAst result = alternation();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  RegexAst alternation() {
    RegexAst lhs = concatenation();
    while (skip_space(), peek() == '|') {
      ++pos_;
      lhs = RegexAst::alternation(std::move(lhs), concatenation());
    }
    return lhs;
  }

  RegexAst concatenation() {
    skip_space();
    if (!starts_unary()) fail(at_end() ? "unexpected end of expression" : std::string("unexpected '") + text_[pos_] + "'");
    RegexAst lhs = unary();
    while (skip_space(), starts_unary()) lhs = RegexAst::concatenation(std::move(lhs), unary());
    return lhs;
  }

  RegexAst unary() {
    std::size_t complements = 0;
    while (skip_space(), peek() == '~') ++complements, ++pos_;
    RegexAst e = atom();
    while (complements-- > 0) e = RegexAst::complement(std::move(e));
    while (skip_space(), peek() == '*') {
      ++pos_;
      e = RegexAst::star(std::move(e));
    }
    return e;
  }

  RegexAst atom() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RegexAst inner = alternation();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\\') {
      if (pos_ + 1 >= text_.size()) fail("dangling escape");
      char e = text_[pos_ + 1];
      if (e == 'e') return pos_ += 2, RegexAst::empty_word();
      if (e == '0') return pos_ += 2, RegexAst::empty_set();
      fail(std::string("unknown escape '\\") + e + "'");
    }
    if (is_operator(c)) fail(std::string("unexpected '") + c + "'");
    if (!alphabet_.contains(c)) fail(std::string("symbol '") + c + "' is not in alphabet {" + alphabet_.symbols() + "}");
    ++pos_;
    return RegexAst::letter(c);
  }

  bool starts_unary() const {
    if (at_end()) return false;
    char c = text_[pos_];
    return c == '(' || c == '~' || c == '\\' || !is_operator(c);
  }

  static bool is_operator(char c) { return c == '|' || c == '*' || c == '(' || c == ')' || c == '~' || c == '\\'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

Dfa empty_set_dfa(const Alphabet& sigma) { return Dfa(sigma, 1, 0, {false}, std::vector<StateId>(sigma.size(), 0)); }

Dfa empty_word_dfa(const Alphabet& sigma) {
  std::vector<StateId> delta(2 * sigma.size(), 1);
  return Dfa(sigma, 2, 0, {true, false}, std::move(delta));
}

Dfa symbol_dfa(const Alphabet& sigma, char c) {
  const std::size_t k = sigma.size();
  std::vector<StateId> delta(3 * k, 2);
  delta[sigma.require(c)] = 1;
  return Dfa(sigma, 3, 0, {false, true, false}, std::move(delta));
}

Dfa union_dfa(const Dfa& l, const Dfa& r, std::size_t cap) {
  const std::size_t k = l.num_symbols();
  const std::size_t m = r.num_states();
  if (l.num_states() * m > cap) throw CapError("union product exceeds the state cap of " + std::to_string(cap));
  std::vector<bool> accepting(l.num_states() * m);
  std::vector<StateId> delta(l.num_states() * m * k);
  for (StateId p = 0; p < l.num_states(); ++p)
    for (StateId q = 0; q < m; ++q) {
      std::size_t s = p * m + q;
      accepting[s] = l.is_accepting(p) || r.is_accepting(q);
      for (std::size_t a = 0; a < k; ++a) delta[s * k + a] = static_cast<StateId>(l.next(p, a) * m + r.next(q, a));
    }
  return Dfa(l.alphabet(), l.num_states() * m, static_cast<StateId>(l.initial() * m + r.initial()),
             std::move(accepting), std::move(delta));
}

// Copies `dfa` into `nfa` at offset `base`.
void embed(detail::Nfa& nfa, const Dfa& dfa, StateId base) {
  for (StateId q = 0; q < dfa.num_states(); ++q)
    for (std::size_t a = 0; a < dfa.num_symbols(); ++a) nfa.add(base + q, a, base + dfa.next(q, a));
}

Dfa concat_dfa(const Dfa& l, const Dfa& r, std::size_t cap) {
  const auto offset = static_cast<StateId>(l.num_states());
  detail::Nfa nfa(l.alphabet(), l.num_states() + r.num_states());
  embed(nfa, l, 0);
  embed(nfa, r, offset);
  nfa.initial = {l.initial()};
  for (StateId q = 0; q < l.num_states(); ++q)
    if (l.is_accepting(q)) nfa.eps[q].push_back(offset + r.initial());
  for (StateId q = 0; q < r.num_states(); ++q) nfa.accepting[offset + q] = r.is_accepting(q);
  return detail::determinize(nfa, cap);
}

Dfa star_dfa(const Dfa& e, std::size_t cap) {
  // State 0 is a fresh accepting start; the copy of `e` lives at offset 1.
  detail::Nfa nfa(e.alphabet(), e.num_states() + 1);
  embed(nfa, e, 1);
  nfa.initial = {0};
  nfa.accepting[0] = true;
  nfa.eps[0].push_back(1 + e.initial());
  for (StateId q = 0; q < e.num_states(); ++q)
    if (e.is_accepting(q)) {
      nfa.accepting[1 + q] = true;
      nfa.eps[1 + q].push_back(0);
    }
  return detail::determinize(nfa, cap);
}

Dfa build(const RegexAst& ast, const Alphabet& sigma, std::size_t cap) {
  using K = RegexAst::Kind;
  auto arity = [&](std::size_t n) {
    if (ast.children.size() != n) throw PreconditionError("malformed regex syntax tree");
  };
  switch (ast.kind) {
    case K::empty_set: arity(0); return empty_set_dfa(sigma);
    case K::empty_word: arity(0); return empty_word_dfa(sigma);
    case K::symbol: arity(0); return symbol_dfa(sigma, ast.symbol);
    case K::alternation:
      arity(2);
      return minimize_dfa(union_dfa(build(ast.children[0], sigma, cap), build(ast.children[1], sigma, cap), cap));
    case K::concatenation:
      arity(2);
      return minimize_dfa(concat_dfa(build(ast.children[0], sigma, cap), build(ast.children[1], sigma, cap), cap));
    case K::star: arity(1); return minimize_dfa(star_dfa(build(ast.children[0], sigma, cap), cap));
    case K::complement: arity(1); return complement_dfa(build(ast.children[0], sigma, cap));
  }
  throw PreconditionError("unknown regex node kind");
}

}  // namespace

RegexAst parse_regex(std::string_view text, const Alphabet& alphabet) { return RegexParser(text, alphabet).parse(); }

Dfa regex_to_dfa(const RegexAst& ast, const Alphabet& alphabet, std::size_t state_cap) {
  return minimize_dfa(build(ast, alphabet, state_cap));
}

std::string to_string(const RegexAst& ast) {
  using K = RegexAst::Kind;
  switch (ast.kind) {
    case K::empty_set: return "\\0";
    case K::empty_word: return "\\e";
    case K::symbol: return std::string(1, ast.symbol);
    case K::alternation: return "(" + to_string(ast.children[0]) + "|" + to_string(ast.children[1]) + ")";
    case K::concatenation: return "(" + to_string(ast.children[0]) + to_string(ast.children[1]) + ")";
    case K::star: return "(" + to_string(ast.children[0]) + ")*";
    case K::complement: return "~(" + to_string(ast.children[0]) + ")";
  }
  return {};
}

}  // namespace biaut
