#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "biaut/error.hpp"

namespace biaut::detail {

std::vector<std::size_t> scc_ids(const Adjacency& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  std::size_t counter = 0, components = 0;

  struct Frame {
    StateId v;
    std::size_t next_edge;
  };
  for (StateId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_edge < adj[f.v].size()) {
        StateId w = adj[f.v][f.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      StateId v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        StateId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
    }
  }
  return comp;
}

namespace {

// Shortest closed walk of length >= 2 through `s`, ignoring self-loops. Such
// a walk is always a simple cycle.
std::optional<std::vector<StateId>> shortest_return(const Adjacency& adj, StateId s) {
  const std::size_t n = adj.size();
  constexpr StateId kNone = std::numeric_limits<StateId>::max();
  std::vector<StateId> parent(n, kNone);
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue;
  for (StateId w : adj[s])
    if (w != s && !seen[w]) seen[w] = true, parent[w] = s, queue.push_back(w);
  while (!queue.empty()) {
    StateId v = queue.front();
    queue.pop_front();
    for (StateId w : adj[v]) {
      if (w == v) continue;
      if (w == s) {
        std::vector<StateId> cycle;
        for (StateId x = v; x != s; x = parent[x]) cycle.push_back(x);
        cycle.push_back(s);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (!seen[w]) seen[w] = true, parent[w] = v, queue.push_back(w);
    }
  }
  return std::nullopt;
}

// Simple cycle of exactly `len` vertices whose minimum vertex is path[0].
bool cycle_of_length(const Adjacency& adj, std::vector<StateId>& path, std::vector<bool>& used, std::size_t len,
                     std::size_t& budget) {
  if (budget-- == 0) throw CapError("cycle search budget exhausted");
  StateId v = path.back();
  StateId s = path.front();
  if (path.size() == len) return std::find(adj[v].begin(), adj[v].end(), s) != adj[v].end();
  for (StateId w : adj[v]) {
    if (w <= s || used[w]) continue;
    used[w] = true;
    path.push_back(w);
    if (cycle_of_length(adj, path, used, len, budget)) return true;
    path.pop_back();
    used[w] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<StateId>> shortest_cycle(const Adjacency& adj, std::size_t min_len) {
  const std::size_t n = adj.size();
  if (min_len <= 1)
    for (StateId v = 0; v < n; ++v)
      if (std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end()) return std::vector<StateId>{v};
  if (min_len <= 2) {
    std::optional<std::vector<StateId>> best;
    for (StateId s = 0; s < n; ++s) {
      auto c = shortest_return(adj, s);
      if (c && (!best || c->size() < best->size())) best = std::move(c);
    }
    return best;
  }
  std::size_t budget = 50'000'000;
  for (std::size_t len = min_len; len <= n; ++len)
    for (StateId s = 0; s < n; ++s) {
      std::vector<StateId> path{s};
      std::vector<bool> used(n, false);
      used[s] = true;
      if (cycle_of_length(adj, path, used, len, budget)) return path;
    }
  return std::nullopt;
}

std::optional<std::vector<StateId>> any_cycle(const Adjacency& adj) {
  return shortest_cycle(adj, 1);
}

}  // namespace biaut::detail
