#include "biaut/alphabet.hpp"

#include <cctype>

#include "biaut/error.hpp"

namespace biaut {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(-1);
  if (symbols_.empty()) throw AlphabetError("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto c = static_cast<unsigned char>(symbols_[i]);
    if (std::isspace(c)) throw AlphabetError("alphabet symbols must not be whitespace");
    if (index_[c] >= 0) throw AlphabetError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    index_[c] = static_cast<std::int16_t>(i);
  }
}

std::size_t Alphabet::require(char c) const {
  auto i = index_of(c);
  if (!i) throw AlphabetError(std::string("symbol '") + c + "' is not in alphabet {" + symbols_ + "}");
  return *i;
}

void Alphabet::check_word(std::string_view word) const {
  for (char c : word) require(c);
}

}  // namespace biaut
