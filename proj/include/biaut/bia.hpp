#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biaut/dfa.hpp"

namespace biaut {

/// Raw transition tables of a biautomaton candidate. Tables are indexed as
/// `q * alphabet.size() + a`. Nothing about the diamond or acceptance
/// property is assumed; use validate_bia, or construct a Bia.
struct BiaTables {
  Alphabet alphabet;
  std::size_t num_states = 0;
  StateId initial = 0;
  std::vector<bool> accepting;
  std::vector<StateId> fwd;
  std::vector<StateId> bwd;

  bool operator==(const BiaTables&) const = default;
};

/// (q.a) o b differs from (q o b).a
struct DiamondViolation {
  StateId state;
  std::size_t a;
  std::size_t b;
  StateId fwd_then_bwd;
  StateId bwd_then_fwd;
};

/// Exactly one of q.a and q o a is accepting.
struct AcceptanceViolation {
  StateId state;
  std::size_t symbol;
};

struct BiaValidation {
  std::optional<DiamondViolation> diamond;
  std::optional<AcceptanceViolation> acceptance;

  bool ok() const { return !diamond && !acceptance; }
  std::string describe(const Alphabet& alphabet) const;
};

/// Reports the lexicographically first (q, a, b) violating the diamond
/// property and the first (q, a) violating the acceptance property. Throws
/// PreconditionError if the tables are not total or out of range.
BiaValidation validate_bia(const BiaTables& candidate);

/// Deterministic biautomaton satisfying the diamond and acceptance
/// properties. Construction validates; no invalid Bia value exists.
class Bia {
 public:
  /// Throws InvalidBiautomaton naming the first violation.
  explicit Bia(BiaTables tables);

  const Alphabet& alphabet() const { return t_.alphabet; }
  std::size_t num_states() const { return t_.num_states; }
  std::size_t num_symbols() const { return t_.alphabet.size(); }
  StateId initial() const { return t_.initial; }
  bool is_accepting(StateId q) const { return t_.accepting[q]; }
  const std::vector<bool>& accepting() const { return t_.accepting; }
  const BiaTables& tables() const { return t_; }

  StateId fwd(StateId q, std::size_t a) const { return t_.fwd[q * num_symbols() + a]; }
  StateId bwd(StateId q, std::size_t a) const { return t_.bwd[q * num_symbols() + a]; }

  /// q . word, reading left to right.
  StateId read_forward(StateId q, std::string_view word) const;
  /// q o word, reading right to left.
  StateId read_backward(StateId q, std::string_view word) const;
  /// (q . u) o v
  StateId read(StateId q, std::string_view u, std::string_view v) const { return read_backward(read_forward(q, u), v); }

  /// All forward and backward transitions of `q` are self-loops.
  bool is_sink(StateId q) const;

  bool operator==(const Bia&) const = default;

 private:
  BiaTables t_;
};

/// Acceptance by forward reading from the initial state.
bool accepts(const Bia& bia, std::string_view word);

/// One (u_i, v_i) step of an alternating computation.
struct SplitStep {
  Word u;
  Word v;
};
using Split = std::vector<SplitStep>;

/// Evaluates ((...((q0 . u1) o v1) . u2) o v2 ...) . uk) o vk in F literally.
bool accepts_split(const Bia& bia, const Split& split);

/// The DFA embedded in the forward transitions: states reachable from the
/// initial state by forward moves, renumbered in BFS order. Not minimized.
Dfa extract_fwd(const Bia& bia);
/// Same for backward transitions; accepts the reversed language.
Dfa extract_bwd(const Bia& bia);

/// Restriction to states reachable by any mix of forward and backward
/// moves, renumbered in canonical BFS order (per symbol, forward then
/// backward, in alphabet order).
Bia reachable_part(const Bia& bia);

/// For every reachable state, the BFS-first pair (u, v) with
/// (q0 . u) o v = q; nullopt for unreachable states.
std::vector<std::optional<SplitStep>> reaching_pairs(const Bia& bia);

}  // namespace biaut
