#include "biaut/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "biaut/error.hpp"
#include "graph.hpp"

namespace biaut {

namespace {

detail::Adjacency letter_graph(const TransitionSystem& sys, const std::vector<bool>& removed) {
  detail::Adjacency adj(sys.num_states);
  for (StateId q = 0; q < sys.num_states; ++q) {
    if (removed[q]) continue;
    for (const auto& m : sys.maps)
      if (!removed[m[q]]) adj[q].push_back(m[q]);
    std::sort(adj[q].begin(), adj[q].end());
    adj[q].erase(std::unique(adj[q].begin(), adj[q].end()), adj[q].end());
  }
  return adj;
}

CycleVerdict label_cycle(const TransitionSystem& sys, std::vector<StateId> cycle) {
  CycleVerdict v;
  v.holds = false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    StateId from = cycle[i], to = cycle[(i + 1) % cycle.size()];
    for (std::size_t m = 0; m < sys.maps.size(); ++m)
      if (sys.maps[m][from] == to) {
        v.letters.push_back(sys.letters[m]);
        break;
      }
  }
  v.cycle = std::move(cycle);
  return v;
}

}  // namespace

CycleVerdict is_acyclic(const TransitionSystem& sys, SinkAllowance allowed) {
  std::vector<bool> removed(sys.num_states, false);
  for (StateId q = 0; q < sys.num_states; ++q) {
    if (!sys.is_sink(q)) continue;
    bool acc = sys.accepting[q];
    removed[q] = allowed == SinkAllowance::both || (acc && allowed == SinkAllowance::accepting) ||
                 (!acc && allowed == SinkAllowance::non_accepting);
  }
  auto cycle = detail::any_cycle(letter_graph(sys, removed));
  if (!cycle) return {};
  return label_cycle(sys, std::move(*cycle));
}

CycleVerdict is_partially_ordered(const TransitionSystem& sys) {
  auto cycle = detail::shortest_cycle(letter_graph(sys, std::vector<bool>(sys.num_states, false)), 2);
  if (!cycle) return {};
  return label_cycle(sys, std::move(*cycle));
}

namespace {

enum class Rel : std::uint8_t { unknown, less, greater };

class OrderSearch {
 public:
  explicit OrderSearch(const TransitionSystem& sys) : sys_(sys), n_(sys.num_states) {}

  std::optional<OrderWitness> run() {
    std::vector<Rel> rel(n_ * n_, Rel::unknown);
    return search(rel);
  }

 private:
  // Records p < q and everything it forces; false on contradiction.
  bool assign(std::vector<Rel>& rel, StateId p0, StateId q0) const {
    std::deque<std::pair<StateId, StateId>> work{{p0, q0}};
    while (!work.empty()) {
      auto [p, q] = work.front();
      work.pop_front();
      if (p == q) return false;
      Rel& r = rel[p * n_ + q];
      if (r == Rel::less) continue;
      if (r == Rel::greater) return false;
      r = Rel::less;
      rel[q * n_ + p] = Rel::greater;
      for (const auto& m : sys_.maps)
        if (m[p] != m[q]) work.emplace_back(m[p], m[q]);
      for (StateId x = 0; x < n_; ++x) {
        if (rel[x * n_ + p] == Rel::less) work.emplace_back(x, q);
        if (rel[q * n_ + x] == Rel::less) work.emplace_back(p, x);
      }
    }
    return true;
  }

  std::optional<OrderWitness> search(const std::vector<Rel>& rel) const {
    for (StateId p = 0; p < n_; ++p)
      for (StateId q = p + 1; q < n_; ++q) {
        if (rel[p * n_ + q] != Rel::unknown) continue;
        for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
          std::vector<Rel> next = rel;
          if (!assign(next, x, y)) continue;
          if (auto found = search(next)) return found;
        }
        return std::nullopt;
      }
    std::vector<std::size_t> below(n_, 0);
    for (StateId p = 0; p < n_; ++p)
      for (StateId q = 0; q < n_; ++q)
        if (rel[p * n_ + q] == Rel::greater) ++below[p];
    OrderWitness order(n_);
    for (StateId p = 0; p < n_; ++p) order[below[p]] = p;
    return order;
  }

  const TransitionSystem& sys_;
  std::size_t n_;
};

}  // namespace

std::optional<OrderWitness> find_total_order(const TransitionSystem& sys, std::size_t cap) {
  if (sys.num_states > cap)
    throw CapError("order search is limited to " + std::to_string(cap) + " states, got " +
                   std::to_string(sys.num_states));
  auto order = OrderSearch(sys).run();
  if (order && !certifies_order(sys, *order)) throw ConsistencyError("order search produced a non-monotone order");
  return order;
}

bool certifies_order(const TransitionSystem& sys, const OrderWitness& order) {
  if (order.size() != sys.num_states) return false;
  std::vector<std::size_t> rank(sys.num_states, sys.num_states);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= sys.num_states || rank[order[i]] != sys.num_states) return false;
    rank[order[i]] = i;
  }
  for (const auto& m : sys.maps)
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
      if (rank[m[order[i]]] > rank[m[order[i + 1]]]) return false;
  return true;
}

namespace {

std::vector<Word> words_of_length(const Alphabet& sigma, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * sigma.size());
    for (const Word& w : out)
      for (char c : sigma.symbols()) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

std::string show(const Word& w) { return w.empty() ? "\\e" : w; }

}  // namespace

OrderedBia build_ordered_bia_finite(const std::vector<Word>& words, const Alphabet& alphabet, bool complement,
                                    std::size_t state_cap) {
  std::size_t ell = 0;
  for (const Word& w : words) {
    alphabet.check_word(w);
    ell = std::max(ell, w.size());
  }
  const std::size_t k = alphabet.size();
  std::size_t count = 1, power = 1;
  for (std::size_t t = 0; t <= ell; ++t) {
    count += (t + 1) * power;
    if (count > state_cap) throw CapError("ordered biautomaton exceeds the state cap of " + std::to_string(state_cap));
    power *= k;
  }

  std::map<std::pair<Word, Word>, StateId> id;
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t t = 0; t <= ell; ++t)
    for (std::size_t i = 0; i <= t; ++i)
      for (const Word& u : words_of_length(alphabet, i))
        for (const Word& v : words_of_length(alphabet, t - i)) {
          id.emplace(std::pair{u, v}, static_cast<StateId>(pairs.size()));
          pairs.emplace_back(u, v);
        }
  const StateId sink = static_cast<StateId>(pairs.size());
  const std::size_t n = pairs.size() + 1;

  BiaTables t{alphabet, n, 0, std::vector<bool>(n, complement), std::vector<StateId>(n * k, sink),
              std::vector<StateId>(n * k, sink)};
  for (StateId q = 0; q < sink; ++q) {
    const auto& [u, v] = pairs[q];
    if (std::find(words.begin(), words.end(), u + v) != words.end()) t.accepting[q] = !complement;
    if (u.size() + v.size() == ell) continue;
    for (std::size_t a = 0; a < k; ++a) {
      t.fwd[q * k + a] = id.at({u + alphabet[a], v});
      t.bwd[q * k + a] = id.at({u, alphabet[a] + v});
    }
  }

  OrderedBia out{Bia(std::move(t)), OrderWitness(n), {}};
  for (StateId q = 0; q < n; ++q) {
    out.order[q] = q;
    out.labels.push_back(q == sink ? "s" : "(" + show(pairs[q].first) + "," + show(pairs[q].second) + ")");
  }
  return out;
}

std::strong_ordering lex_compare(std::string_view lhs, std::string_view rhs, const Alphabet& alphabet) {
  for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i) {
    std::size_t a = alphabet.require(lhs[i]), b = alphabet.require(rhs[i]);
    if (a != b) return a <=> b;
  }
  return lhs.size() <=> rhs.size();
}

TransitionVerdict is_non_exiting(const TransitionSystem& sys) {
  for (StateId q = 0; q < sys.num_states; ++q) {
    if (!sys.accepting[q]) continue;
    for (std::size_t m = 0; m < sys.maps.size(); ++m) {
      StateId t = sys.maps[m][q];
      if (sys.accepting[t] || !sys.is_sink(t)) return {false, TransitionRef{q, sys.letters[m], t}};
    }
  }
  return {};
}

TransitionVerdict is_non_returning(const TransitionSystem& sys) {
  for (StateId q = 0; q < sys.num_states; ++q)
    for (std::size_t m = 0; m < sys.maps.size(); ++m)
      if (sys.maps[m][q] == sys.initial) return {false, TransitionRef{q, sys.letters[m], sys.initial}};
  return {};
}

CommutativityVerdict is_commutative(const Dfa& dfa) {
  for (StateId q = 0; q < dfa.num_states(); ++q)
    for (std::size_t a = 0; a < dfa.num_symbols(); ++a)
      for (std::size_t b = a + 1; b < dfa.num_symbols(); ++b)
        if (dfa.next(dfa.next(q, a), b) != dfa.next(dfa.next(q, b), a))
          return {false, CommutationViolation{q, a, b}};
  return {};
}

CommutativityVerdict is_commutative(const Bia& bia) {
  for (StateId q = 0; q < bia.num_states(); ++q)
    for (std::size_t a = 0; a < bia.num_symbols(); ++a)
      if (bia.fwd(q, a) != bia.bwd(q, a)) return {false, CommutationViolation{q, a, a}};
  return {};
}

namespace {

// Every state reaches q under some positive power of t.
template <typename Map>
bool is_attractor(std::size_t n, StateId q, Map&& t) {
  if (q >= n) throw PreconditionError("state out of range");
  for (StateId p = 0; p < n; ++p) {
    StateId x = p;
    bool hit = false;
    for (std::size_t k = 0; k < n && !hit; ++k) {
      x = t(x);
      hit = x == q;
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool is_w_attractor(const Dfa& dfa, std::string_view w, StateId q) {
  if (w.empty()) throw PreconditionError("attractor word must be non-empty");
  dfa.alphabet().check_word(w);
  return is_attractor(dfa.num_states(), q, [&](StateId p) { return dfa.read(p, w); });
}

bool is_uv_attractor(const Bia& bia, std::string_view u, std::string_view v, StateId q) {
  if (u.empty() && v.empty()) throw PreconditionError("attractor words must not both be empty");
  bia.alphabet().check_word(u);
  bia.alphabet().check_word(v);
  return is_attractor(bia.num_states(), q, [&](StateId p) { return bia.read(p, u, v); });
}

namespace {

// For every ordered pair (p, q) at index p*n+q: the right languages of p and
// q differ on infinitely many words.
std::vector<bool> infinite_differences(const TransitionSystem& sys) {
  const std::size_t n = sys.num_states;
  const std::size_t nodes = n * n;
  std::vector<const std::vector<StateId>*> forward;
  for (std::size_t m = 0; m < sys.maps.size(); ++m)
    if (sys.letters[m].dir == Direction::forward) forward.push_back(&sys.maps[m]);

  detail::Adjacency adj(nodes), radj(nodes);
  for (StateId p = 0; p < n; ++p)
    for (StateId q = 0; q < n; ++q)
      for (const auto* m : forward) {
        StateId from = p * n + q, to = (*m)[p] * n + (*m)[q];
        adj[from].push_back(to);
        radj[to].push_back(from);
      }

  auto backward_closure = [&](std::vector<bool> marked) {
    std::deque<StateId> queue;
    for (StateId x = 0; x < nodes; ++x)
      if (marked[x]) queue.push_back(x);
    while (!queue.empty()) {
      StateId x = queue.front();
      queue.pop_front();
      for (StateId y : radj[x])
        if (!marked[y]) marked[y] = true, queue.push_back(y);
    }
    return marked;
  };

  std::vector<bool> diff(nodes);
  for (StateId p = 0; p < n; ++p)
    for (StateId q = 0; q < n; ++q) diff[p * n + q] = sys.accepting[p] != sys.accepting[q];
  std::vector<bool> reaches_diff = backward_closure(std::move(diff));

  auto comp = detail::scc_ids(adj);
  std::vector<std::size_t> comp_size(nodes, 0);
  for (StateId x = 0; x < nodes; ++x) ++comp_size[comp[x]];
  std::vector<bool> seeds(nodes, false);
  for (StateId x = 0; x < nodes; ++x) {
    bool cyclic = comp_size[comp[x]] > 1 || std::find(adj[x].begin(), adj[x].end(), x) != adj[x].end();
    seeds[x] = cyclic && reaches_diff[x];
  }
  return backward_closure(std::move(seeds));
}

}  // namespace

bool almost_equivalent(const TransitionSystem& sys, StateId p, StateId q) {
  if (p >= sys.num_states || q >= sys.num_states) throw PreconditionError("state out of range");
  return !infinite_differences(sys)[p * sys.num_states + q];
}

PairVerdict all_states_almost_equivalent(const TransitionSystem& sys) {
  auto infinite = infinite_differences(sys);
  for (StateId p = 0; p < sys.num_states; ++p)
    for (StateId q = p + 1; q < sys.num_states; ++q)
      if (infinite[p * sys.num_states + q]) return {false, std::pair{p, q}};
  return {};
}

std::optional<std::size_t> synchronizing_depth(const Dfa& dfa) {
  const std::size_t n = dfa.num_states();
  // Unordered pairs p < q, indexed p*n+q; edges to the diagonal are dropped.
  std::vector<std::vector<std::size_t>> succ(n * n);
  std::vector<std::size_t> indegree(n * n, 0);
  std::vector<std::size_t> nodes;
  for (StateId p = 0; p < n; ++p)
    for (StateId q = p + 1; q < n; ++q) {
      nodes.push_back(p * n + q);
      for (std::size_t a = 0; a < dfa.num_symbols(); ++a) {
        StateId x = dfa.next(p, a), y = dfa.next(q, a);
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        succ[p * n + q].push_back(x * n + y);
        ++indegree[x * n + y];
      }
    }
  // Longest path, counted in nodes, via Kahn's order.
  std::vector<std::size_t> longest(n * n, 1);
  std::deque<std::size_t> ready;
  for (std::size_t x : nodes)
    if (indegree[x] == 0) ready.push_back(x);
  std::size_t processed = 0, depth = 0;
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t x = ready.front();
    ready.pop_front();
    order.push_back(x);
    ++processed;
    for (std::size_t y : succ[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  if (processed != nodes.size()) return std::nullopt;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t y : succ[*it]) longest[*it] = std::max(longest[*it], longest[y] + 1);
    depth = std::max(depth, longest[*it]);
  }
  return depth;
}

}  // namespace biaut
