#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biaut/bia.hpp"
#include "biaut/dfa.hpp"
#include "biaut/semigroup.hpp"

namespace biaut {

enum class Verdict { yes, no, unknown };

const char* verdict_name(Verdict v);

/// Definite languages: the verdict, and when definite the smallest k such
/// that membership of words of length >= k depends only on their last k
/// letters. Evidence is set when not definite.
struct DefiniteVerdict {
  bool holds;
  std::optional<std::size_t> k;
  std::optional<PermutationEvidence> evidence;
};

/// Expects a minimal DFA.
DefiniteVerdict is_definite(const Dfa& dfa);
/// Expects a minimal DFA. Throws CapError if the semigroup is capped.
PermutationFreeVerdict is_star_free(const Dfa& dfa, std::size_t cap = kDefaultSemigroupCap);
/// Expects a minimal DFA.
PermutationVerdict is_p_regular(const Dfa& dfa);

/// Two distinct words of the language with `shorter` a circumfix of
/// `longer`.
struct CircumfixPair {
  Word longer;
  Word shorter;
};

struct CircumfixVerdict {
  bool holds;
  std::optional<CircumfixPair> pair;
};

CircumfixVerdict is_circumfix_free(const Dfa& dfa);

/// `shorter` arises from `longer` by deleting one (possibly empty) factor.
bool is_circumfix_of(std::string_view shorter, std::string_view longer);

struct FamilyEntry {
  std::string family;
  Verdict verdict;
  /// The verdict is that of a structural check whose equivalence with
  /// family membership is not established.
  bool conditional = false;
  std::string method;
  std::string witness;
};

struct ClassificationReport {
  Alphabet alphabet;
  std::size_t dfa_states = 0;
  std::size_t reversed_dfa_states = 0;
  std::size_t bia_states = 0;
  std::vector<FamilyEntry> entries;

  /// Throws PreconditionError for an unknown family name.
  const FamilyEntry& at(std::string_view family) const;
};

/// Family names in report order.
const std::vector<std::string>& family_names();

ClassificationReport classify(const Dfa& dfa);

std::string render_table(const ClassificationReport& report);
/// Compact JSON with keys alphabet, states, families (list of objects with
/// family, verdict, conditional, method, witness).
std::string to_json(const ClassificationReport& report);

}  // namespace biaut
