#include "biaut/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "biaut/error.hpp"
#include "subset.hpp"

namespace biaut {

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, StateId initial, std::vector<bool> accepting,
         std::vector<StateId> delta)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  if (alphabet_.empty()) throw PreconditionError("DFA alphabet must not be empty");
  if (num_states_ == 0) throw PreconditionError("DFA must have at least one state");
  if (initial_ >= num_states_) throw PreconditionError("DFA initial state out of range");
  if (accepting_.size() != num_states_) throw PreconditionError("DFA accepting vector has wrong size");
  if (delta_.size() != num_states_ * alphabet_.size()) throw PreconditionError("DFA transition table is not total");
  for (StateId t : delta_)
    if (t >= num_states_) throw PreconditionError("DFA transition target out of range");
}

StateId Dfa::read(StateId q, std::string_view word) const {
  for (char c : word) q = next(q, alphabet_.require(c));
  return q;
}

bool Dfa::is_sink(StateId q) const {
  for (std::size_t a = 0; a < num_symbols(); ++a)
    if (next(q, a) != q) return false;
  return true;
}

RunResult run_dfa(const Dfa& dfa, std::string_view word) {
  StateId q = dfa.read(dfa.initial(), word);
  return {q, dfa.is_accepting(q)};
}

Dfa canonical_dfa(const Dfa& dfa) {
  const std::size_t k = dfa.num_symbols();
  constexpr StateId kUnseen = ~StateId{0};
  std::vector<StateId> id(dfa.num_states(), kUnseen);
  std::vector<StateId> order{dfa.initial()};
  id[dfa.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      StateId t = dfa.next(order[i], a);
      if (id[t] == kUnseen) {
        id[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<bool> accepting(order.size());
  std::vector<StateId> delta(order.size() * k);
  for (std::size_t i = 0; i < order.size(); ++i) {
    accepting[i] = dfa.is_accepting(order[i]);
    for (std::size_t a = 0; a < k; ++a) delta[i * k + a] = id[dfa.next(order[i], a)];
  }
  return Dfa(dfa.alphabet(), order.size(), 0, std::move(accepting), std::move(delta));
}

Dfa minimize_dfa(const Dfa& input) {
  Dfa dfa = canonical_dfa(input);
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.num_symbols();

  std::vector<StateId> block(n);
  for (std::size_t q = 0; q < n; ++q) block[q] = dfa.is_accepting(static_cast<StateId>(q)) ? 1 : 0;
  std::size_t num_blocks = 0;
  while (true) {
    std::map<std::vector<StateId>, StateId> signatures;
    std::vector<StateId> refined(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<StateId> sig;
      sig.reserve(k + 1);
      sig.push_back(block[q]);
      for (std::size_t a = 0; a < k; ++a) sig.push_back(block[dfa.next(static_cast<StateId>(q), a)]);
      auto [it, inserted] = signatures.try_emplace(std::move(sig), static_cast<StateId>(signatures.size()));
      refined[q] = it->second;
    }
    block = std::move(refined);
    if (signatures.size() == num_blocks) break;
    num_blocks = signatures.size();
  }

  std::vector<bool> accepting(num_blocks);
  std::vector<StateId> delta(num_blocks * k);
  for (std::size_t q = 0; q < n; ++q) {
    accepting[block[q]] = dfa.is_accepting(static_cast<StateId>(q));
    for (std::size_t a = 0; a < k; ++a) delta[block[q] * k + a] = block[dfa.next(static_cast<StateId>(q), a)];
  }
  return canonical_dfa(Dfa(dfa.alphabet(), num_blocks, block[dfa.initial()], std::move(accepting), std::move(delta)));
}

Dfa reverse_dfa(const Dfa& input, std::size_t state_cap) {
  Dfa dfa = canonical_dfa(input);
  const std::size_t k = dfa.num_symbols();
  detail::Nfa nfa(dfa.alphabet(), dfa.num_states());
  for (StateId q = 0; q < dfa.num_states(); ++q) {
    if (dfa.is_accepting(q)) nfa.initial.push_back(q);
    for (std::size_t a = 0; a < k; ++a) nfa.add(dfa.next(q, a), a, q);
  }
  nfa.accepting[dfa.initial()] = true;
  return minimize_dfa(detail::determinize(nfa, state_cap));
}

Dfa complement_dfa(const Dfa& dfa) {
  std::vector<bool> accepting = dfa.accepting();
  accepting.flip();
  return Dfa(dfa.alphabet(), dfa.num_states(), dfa.initial(), std::move(accepting), dfa.table());
}

bool dfa_isomorphic(const Dfa& lhs, const Dfa& rhs) { return canonical_dfa(lhs) == canonical_dfa(rhs); }

EquivalenceResult product_status(const Dfa& first, const Dfa& second) {
  if (!(first.alphabet() == second.alphabet()))
    throw AlphabetError("alphabet mismatch: {" + first.alphabet().symbols() + "} vs {" +
                        second.alphabet().symbols() + "}");
  const std::size_t k = first.num_symbols();
  const std::size_t m = second.num_states();
  auto key = [m](StateId p, StateId q) { return static_cast<std::size_t>(p) * m + q; };

  struct Node {
    StateId p, q;
    std::size_t parent;
    std::size_t symbol;
  };
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<bool> seen(first.num_states() * m, false);
  std::vector<Node> nodes{{first.initial(), second.initial(), kNone, 0}};
  seen[key(first.initial(), second.initial())] = true;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [p, q, parent, symbol] = nodes[i];
    bool in_first = first.is_accepting(p);
    if (in_first != second.is_accepting(q)) {
      Word w;
      for (std::size_t j = i; nodes[j].parent != kNone; j = nodes[j].parent) w.push_back(first.alphabet()[nodes[j].symbol]);
      std::reverse(w.begin(), w.end());
      return {in_first ? EquivalenceStatus::first_minus_second : EquivalenceStatus::second_minus_first, w};
    }
    for (std::size_t a = 0; a < k; ++a) {
      StateId np = first.next(p, a), nq = second.next(q, a);
      if (!seen[key(np, nq)]) {
        seen[key(np, nq)] = true;
        nodes.push_back({np, nq, i, a});
      }
    }
  }
  return {EquivalenceStatus::equal, {}};
}

namespace {

// Longest path from the initial state to an accepting state through live
// states, or nullopt if the language is empty. `cyclic` is set if the live
// part has a cycle (self-loops included), in which case the language is
// infinite and the length is meaningless.
struct LiveAnalysis {
  bool empty;
  bool cyclic;
  std::size_t longest;
};

LiveAnalysis analyse_live(const Dfa& dfa) {
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.num_symbols();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId q = 0; q < n; ++q)
    for (std::size_t a = 0; a < k; ++a) preds[dfa.next(q, a)].push_back(q);

  std::vector<bool> reach(n, false), coreach(n, false);
  std::vector<StateId> stack{dfa.initial()};
  reach[dfa.initial()] = true;
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < k; ++a) {
      StateId t = dfa.next(q, a);
      if (!reach[t]) reach[t] = true, stack.push_back(t);
    }
  }
  for (StateId q = 0; q < n; ++q)
    if (dfa.is_accepting(q)) coreach[q] = true, stack.push_back(q);
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : preds[q])
      if (!coreach[p]) coreach[p] = true, stack.push_back(p);
  }
  std::vector<bool> live(n);
  for (std::size_t q = 0; q < n; ++q) live[q] = reach[q] && coreach[q];
  if (!live[dfa.initial()]) return {true, false, 0};

  // Kahn's algorithm on the live subgraph (parallel edges counted).
  std::vector<std::size_t> indeg(n, 0);
  for (StateId q = 0; q < n; ++q)
    if (live[q])
      for (std::size_t a = 0; a < k; ++a)
        if (live[dfa.next(q, a)]) ++indeg[dfa.next(q, a)];
  std::vector<StateId> topo;
  for (StateId q = 0; q < n; ++q)
    if (live[q] && indeg[q] == 0) topo.push_back(q);
  for (std::size_t i = 0; i < topo.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      StateId t = dfa.next(topo[i], a);
      if (live[t] && --indeg[t] == 0) topo.push_back(t);
    }
  std::size_t live_count = static_cast<std::size_t>(std::count(live.begin(), live.end(), true));
  if (topo.size() != live_count) return {false, true, 0};

  constexpr long kUnreached = -1;
  std::vector<long> dist(n, kUnreached);
  dist[dfa.initial()] = 0;
  std::size_t longest = 0;
  for (StateId q : topo) {
    if (dist[q] == kUnreached) continue;
    if (dfa.is_accepting(q)) longest = std::max(longest, static_cast<std::size_t>(dist[q]));
    for (std::size_t a = 0; a < k; ++a) {
      StateId t = dfa.next(q, a);
      if (live[t]) dist[t] = std::max(dist[t], dist[q] + 1);
    }
  }
  return {false, false, longest};
}

}  // namespace

Finiteness finiteness(const Dfa& input) {
  Dfa dfa = minimize_dfa(input);
  LiveAnalysis lang = analyse_live(dfa);
  if (!lang.cyclic)
    return {FinitenessKind::finite, lang.empty ? std::nullopt : std::optional<std::size_t>(lang.longest), std::nullopt};
  LiveAnalysis co = analyse_live(complement_dfa(dfa));
  if (!co.cyclic)
    return {FinitenessKind::cofinite, std::nullopt, co.empty ? std::nullopt : std::optional<std::size_t>(co.longest)};
  return {FinitenessKind::infinite_coinfinite, std::nullopt, std::nullopt};
}

std::vector<std::optional<Word>> representative_words(const Dfa& dfa) {
  std::vector<std::optional<Word>> words(dfa.num_states());
  std::deque<StateId> queue{dfa.initial()};
  words[dfa.initial()] = Word{};
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < dfa.num_symbols(); ++a) {
      StateId t = dfa.next(q, a);
      if (!words[t]) {
        words[t] = *words[q] + dfa.alphabet()[a];
        queue.push_back(t);
      }
    }
  }
  return words;
}

Word representative_word(const Dfa& dfa, StateId state) {
  if (state >= dfa.num_states()) throw PreconditionError("state " + std::to_string(state) + " out of range");
  auto words = representative_words(dfa);
  if (!words[state]) throw PreconditionError("state " + std::to_string(state) + " is unreachable");
  return *words[state];
}

namespace detail {

namespace {

void close_under_eps(const Nfa& nfa, std::vector<StateId>& set) {
  std::vector<bool> in(nfa.num_states, false);
  for (StateId q : set) in[q] = true;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (StateId t : nfa.eps[set[i]])
      if (!in[t]) in[t] = true, set.push_back(t);
  std::sort(set.begin(), set.end());
}

}  // namespace

Dfa determinize(const Nfa& nfa, std::size_t cap) {
  const std::size_t k = nfa.alphabet.size();
  std::map<std::vector<StateId>, StateId> ids;
  std::vector<std::vector<StateId>> subsets;
  auto intern = [&](std::vector<StateId> set) {
    close_under_eps(nfa, set);
    auto [it, inserted] = ids.try_emplace(set, static_cast<StateId>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= cap)
        throw CapError("subset construction exceeded the state cap of " + std::to_string(cap));
      subsets.push_back(std::move(set));
    }
    return it->second;
  };

  intern(nfa.initial);
  std::vector<StateId> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<StateId> target;
      for (StateId q : subsets[i]) {
        const auto& succ = nfa.succ[q * k + a];
        target.insert(target.end(), succ.begin(), succ.end());
      }
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      StateId id = intern(std::move(target));
      delta.push_back(id);
    }
  }
  std::vector<bool> accepting(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (StateId q : subsets[i])
      if (nfa.accepting[q]) accepting[i] = true;
  return Dfa(nfa.alphabet, subsets.size(), 0, std::move(accepting), std::move(delta));
}

}  // namespace detail

}  // namespace biaut
