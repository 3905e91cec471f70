#pragma once

// Named structural properties with replayable text witnesses. A witness is
// a list of `key: value` lines; states are written with their document
// names and letters as `a` (DFA) or `a/fwd`, `a/bwd` (biautomaton).

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biaut/document.hpp"
#include "biaut/semigroup.hpp"
#include "biaut/structure.hpp"

namespace biaut {

enum class Property {
  permutation,
  permutation_free,
  strongly_permutation_free,
  acyclic,
  partially_ordered,
  ordered,
  non_exiting,
  non_returning,
  commutative,
  word_cycle,
  graph_cycle,
};

const std::vector<Property>& all_properties();
const char* property_name(Property p);
std::optional<Property> parse_property(std::string_view name);

const char* sink_allowance_name(SinkAllowance s);
std::optional<SinkAllowance> parse_sink_allowance(std::string_view name);

struct CheckOptions {
  std::size_t max_word_len = 4;
  std::size_t min_cycle_len = 2;
  SinkAllowance allowed_sink = SinkAllowance::non_accepting;
  std::size_t semigroup_cap = kDefaultSemigroupCap;
};

struct CheckResult {
  Property property;
  bool holds;
  /// A negative answer only covers words up to a bound.
  bool bounded = false;
  /// Witness lines in output order.
  std::vector<std::pair<std::string, std::string>> fields;
};

/// Throws PreconditionError when the property needs a biautomaton and gets a
/// DFA (word-cycle, graph-cycle), or a bound is out of range.
CheckResult run_check(Property property, const NamedAutomaton& automaton, const CheckOptions& options = {});

/// `<property>: yes|no` followed by the witness lines.
std::string render_check(const CheckResult& result);
/// The witness document: property and holds lines, then the fields.
std::string render_witness(const CheckResult& result);
std::string to_json(const CheckResult& result);

struct VerifyResult {
  bool valid;
  std::string message;
  /// The property the witness is about, once known.
  std::optional<Property> property = std::nullopt;
};

/// Re-derives the verdict under the witness's own options and replays every
/// state, word and letter the witness names against `automaton`. Accepts
/// witness text as well as `render_check` and JSON output.
VerifyResult verify_witness(const NamedAutomaton& automaton, std::string_view witness_text);

}  // namespace biaut
