#pragma once

// Line-oriented automaton files:
//
//   type: dfa            # or: bia
//   alphabet: a b
//   states: q0 q1 q2
//   initial: q0
//   accepting: q2
//   trans: q0 a q1       # dfa only, one line per (state, symbol)
//   fwd: q0 a q1         # bia only
//   bwd: q0 a q0         # bia only

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "biaut/bia.hpp"
#include "biaut/dfa.hpp"

namespace biaut {

enum class AutomatonKind { dfa, bia };

struct AutomatonDoc {
  AutomatonKind kind = AutomatonKind::dfa;
  Alphabet alphabet;
  std::vector<std::string> states;
  StateId initial = 0;
  std::vector<bool> accepting;
  /// Indexed state * |alphabet| + symbol.
  std::vector<StateId> forward;
  /// Empty for a DFA.
  std::vector<StateId> backward;

  bool operator==(const AutomatonDoc&) const = default;
};

/// Throws ParseError (with the offending line where one exists) on syntax
/// errors, unknown states or symbols, duplicate and missing transitions.
AutomatonDoc load_doc(std::string_view text);

/// Canonical form: fixed section order, transitions ordered by state, then
/// symbol, forward before backward.
std::string save_doc(const AutomatonDoc& doc);

AutomatonDoc load_doc_file(const std::string& path);
void save_text_file(const std::string& path, std::string_view text);

/// A DFA or biautomaton with display names for its states.
struct NamedAutomaton {
  std::variant<Dfa, Bia> automaton;
  std::vector<std::string> names;

  bool is_bia() const { return std::holds_alternative<Bia>(automaton); }
  const Dfa& dfa() const { return std::get<Dfa>(automaton); }
  const Bia& bia() const { return std::get<Bia>(automaton); }
};

/// Throws InvalidBiautomaton for biautomaton documents violating the
/// diamond or acceptance property.
NamedAutomaton to_automaton(const AutomatonDoc& doc);
/// States are named q0, q1, ... unless `names` is given.
AutomatonDoc to_doc(const Dfa& dfa, std::vector<std::string> names = {});
AutomatonDoc to_doc(const Bia& bia, std::vector<std::string> names = {});
AutomatonDoc to_doc(const NamedAutomaton& automaton);

/// Graphviz rendering. Accepting states are double circles; biautomaton
/// backward transitions are dashed.
std::string to_dot(const NamedAutomaton& automaton);

}  // namespace biaut
