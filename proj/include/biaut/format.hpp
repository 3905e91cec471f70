#pragma once

// Text rendering shared by reports, witnesses and the command line.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biaut/alphabet.hpp"

namespace biaut {

/// The word itself, or \e for the empty word.
inline std::string show_word(std::string_view w) { return w.empty() ? std::string("\\e") : std::string(w); }

/// Inverse of show_word.
inline Word parse_shown_word(std::string_view text) { return text == "\\e" ? Word{} : Word(text); }

/// q0, q1, ... as used for canonical documents.
inline std::vector<std::string> default_state_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  return names;
}

inline std::string join_states(std::span<const StateId> states, std::span<const std::string> names,
                               std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += sep;
    out += names[states[i]];
  }
  return out;
}

}  // namespace biaut
