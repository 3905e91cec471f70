#include "biaut/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "biaut/error.hpp"
#include "graph.hpp"

namespace biaut {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<StateId>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (StateId x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::vector<StateId> sorted_unique(std::vector<StateId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

PermutationEvidence make_evidence(const Alphabet& alphabet, const Transformation& t, std::vector<StateId> subset) {
  PermutationEvidence e;
  std::tie(e.u, e.v) = split_provenance(alphabet, t.provenance);
  e.subset = std::move(subset);
  e.trivial = true;
  for (StateId p : e.subset) {
    e.mapping.push_back(t.image[p]);
    if (t.image[p] != p) e.trivial = false;
  }
  return e;
}

Semigroup closed_semigroup(const TransitionSystem& sys, std::size_t cap) {
  Semigroup s = semigroup_of(sys, cap);
  if (s.capped) throw CapError("transition semigroup exceeds the element cap of " + std::to_string(cap));
  return s;
}

}  // namespace

Semigroup semigroup_of(const TransitionSystem& sys, std::size_t cap) {
  Semigroup s;
  std::unordered_map<std::vector<StateId>, std::size_t, ImageHash> index;
  auto add = [&](Transformation t) {
    if (index.contains(t.image)) return true;
    if (s.elements.size() >= cap) {
      s.capped = true;
      return false;
    }
    index.emplace(t.image, s.elements.size());
    s.elements.push_back(std::move(t));
    return true;
  };
  for (std::size_t i = 0; i < sys.maps.size(); ++i) {
    Transformation g{sys.maps[i], {sys.letters[i]}};
    s.generators.push_back(g);
    if (!add(std::move(g))) return s;
  }
  for (std::size_t e = 0; e < s.elements.size(); ++e) {
    for (std::size_t i = 0; i < sys.maps.size(); ++i) {
      Transformation next;
      next.image.resize(sys.num_states);
      for (std::size_t q = 0; q < sys.num_states; ++q) next.image[q] = sys.maps[i][s.elements[e].image[q]];
      next.provenance = s.elements[e].provenance;
      next.provenance.push_back(sys.letters[i]);
      if (!add(std::move(next))) return s;
    }
  }
  return s;
}

std::pair<Word, Word> split_provenance(const Alphabet& alphabet, const std::vector<Letter>& provenance) {
  Word u, v;
  for (const Letter& l : provenance) {
    if (l.dir == Direction::forward)
      u.push_back(alphabet[l.symbol]);
    else
      v.insert(v.begin(), alphabet[l.symbol]);
  }
  return {u, v};
}

StableRank stable_rank(std::span<const StateId> image) {
  std::vector<StateId> current(image.size());
  std::iota(current.begin(), current.end(), StateId{0});
  while (true) {
    std::vector<StateId> next;
    next.reserve(current.size());
    for (StateId q : current) next.push_back(image[q]);
    next = sorted_unique(std::move(next));
    if (next.size() == current.size()) return {current.size(), std::move(current)};
    current = std::move(next);
  }
}

PermutationVerdict is_permutation(const TransitionSystem& sys) {
  constexpr StateId kNone = ~StateId{0};
  for (std::size_t i = 0; i < sys.maps.size(); ++i) {
    std::vector<StateId> first_source(sys.num_states, kNone);
    for (StateId q = 0; q < sys.num_states; ++q) {
      StateId t = sys.maps[i][q];
      if (first_source[t] != kNone) return {false, Collision{first_source[t], q, sys.letters[i], t}};
      first_source[t] = q;
    }
  }
  return {true, std::nullopt};
}

PermutationFreeVerdict is_permutation_free(const TransitionSystem& sys, std::size_t cap) {
  Semigroup s = closed_semigroup(sys, cap);
  for (const Transformation& t : s.elements) {
    StableRank sr = stable_rank(t.image);
    for (StateId p : sr.stable_image) {
      if (t.image[p] == p) continue;
      std::vector<StateId> orbit{p};
      for (StateId x = t.image[p]; x != p; x = t.image[x]) orbit.push_back(x);
      return {false, make_evidence(sys.alphabet, t, sorted_unique(std::move(orbit)))};
    }
  }
  return {true, std::nullopt};
}

PermutationFreeVerdict is_strongly_permutation_free(const TransitionSystem& sys, std::size_t cap) {
  Semigroup s = closed_semigroup(sys, cap);
  for (const Transformation& t : s.elements) {
    StableRank sr = stable_rank(t.image);
    if (sr.rank >= 2) return {false, make_evidence(sys.alphabet, t, std::move(sr.stable_image))};
  }
  return {true, std::nullopt};
}

bool is_permutation_of(std::span<const StateId> subset, std::span<const StateId> mapping) {
  if (subset.size() != mapping.size() || subset.empty()) return false;
  std::vector<StateId> a(subset.begin(), subset.end()), b(mapping.begin(), mapping.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::adjacent_find(a.begin(), a.end()) == a.end() && a == b;
}

bool evidence_replays(const TransitionSystem& sys, const PermutationEvidence& e) {
  if (!sys.two_way && !e.v.empty()) return false;
  std::vector<StateId> mapping;
  bool trivial = true;
  for (StateId p : e.subset) {
    if (p >= sys.num_states) return false;
    StateId q = sys.apply(p, e.u, e.v);
    mapping.push_back(q);
    if (q != p) trivial = false;
  }
  return mapping == e.mapping && is_permutation_of(e.subset, mapping) && trivial == e.trivial;
}

namespace {

// Enumerates the non-empty words of length `len` in lexicographic order
// (alphabet order) via an odometer.
template <typename Visit>
bool for_each_word(const Alphabet& sigma, std::size_t len, Visit&& visit) {
  std::vector<std::size_t> digits(len, 0);
  Word w(len, sigma[0]);
  while (true) {
    if (visit(w)) return true;
    std::size_t i = len;
    while (i > 0 && digits[i - 1] + 1 == sigma.size()) {
      digits[i - 1] = 0;
      w[i - 1] = sigma[0];
      --i;
    }
    if (i == 0) return false;
    ++digits[i - 1];
    w[i - 1] = sigma[digits[i - 1]];
  }
}

void add_edge(detail::Adjacency& adj, StateId from, StateId to) {
  auto& out = adj[from];
  if (std::find(out.begin(), out.end(), to) == out.end()) out.push_back(to);
}

void sort_adjacency(detail::Adjacency& adj) {
  for (auto& out : adj) std::sort(out.begin(), out.end());
}

}  // namespace

std::optional<WordCycle> find_word_cycle(const Bia& bia, std::size_t max_word_len, std::size_t min_cycle_len) {
  const std::size_t n = bia.num_states();
  std::optional<WordCycle> found;
  for (std::size_t len = 1; len <= max_word_len && !found; ++len) {
    for_each_word(bia.alphabet(), len, [&](const Word& w) {
      detail::Adjacency adj(n);
      // split[p][q]: length of u for the first split taking p to q.
      std::vector<std::vector<std::size_t>> split(n, std::vector<std::size_t>(n, 0));
      std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
      for (StateId p = 0; p < n; ++p)
        for (std::size_t i = 0; i <= len; ++i) {
          StateId q = bia.read(p, std::string_view(w).substr(0, i), std::string_view(w).substr(i));
          if (!has[p][q]) {
            has[p][q] = true;
            split[p][q] = i;
            add_edge(adj, p, q);
          }
        }
      sort_adjacency(adj);
      auto cycle = detail::shortest_cycle(adj, min_cycle_len);
      if (!cycle) return false;
      WordCycle wc{w, *cycle, {}};
      for (std::size_t i = 0; i < cycle->size(); ++i)
        wc.splits.push_back(split[(*cycle)[i]][(*cycle)[(i + 1) % cycle->size()]]);
      found = std::move(wc);
      return true;
    });
  }
  return found;
}

std::optional<GraphCycle> find_graph_cycle(const Bia& bia, std::size_t max_word_len, std::size_t min_cycle_len) {
  const std::size_t n = bia.num_states();
  std::optional<GraphCycle> found;
  for (std::size_t len = 1; len <= max_word_len && !found; ++len) {
    for_each_word(bia.alphabet(), len, [&](const Word& w) {
      detail::Adjacency adj(n);
      // heads[p][q]: a head sequence taking p to q, if any.
      std::vector<std::vector<std::optional<std::vector<Direction>>>> heads(
          n, std::vector<std::optional<std::vector<Direction>>>(n));
      for (StateId p = 0; p < n; ++p) {
        // Layered reachability with one realizing head sequence per state.
        std::vector<std::optional<std::vector<Direction>>> layer(n);
        layer[p] = std::vector<Direction>{};
        for (char c : w) {
          std::size_t a = bia.alphabet().require(c);
          std::vector<std::optional<std::vector<Direction>>> next(n);
          for (StateId x = 0; x < n; ++x) {
            if (!layer[x]) continue;
            for (Direction d : {Direction::forward, Direction::backward}) {
              StateId y = d == Direction::forward ? bia.fwd(x, a) : bia.bwd(x, a);
              if (!next[y]) {
                next[y] = *layer[x];
                next[y]->push_back(d);
              }
            }
          }
          layer = std::move(next);
        }
        for (StateId q = 0; q < n; ++q)
          if (layer[q]) {
            heads[p][q] = std::move(layer[q]);
            add_edge(adj, p, q);
          }
      }
      sort_adjacency(adj);
      auto cycle = detail::shortest_cycle(adj, min_cycle_len);
      if (!cycle) return false;
      GraphCycle gc{w, *cycle, {}};
      for (std::size_t i = 0; i < cycle->size(); ++i)
        gc.heads.push_back(*heads[(*cycle)[i]][(*cycle)[(i + 1) % cycle->size()]]);
      found = std::move(gc);
      return true;
    });
  }
  return found;
}

std::vector<StateId> apply_power(std::span<const StateId> map, std::size_t exponent, std::span<const StateId> subset) {
  std::vector<StateId> out;
  out.reserve(subset.size());
  for (StateId p : subset) {
    StateId q = p;
    for (std::size_t i = 0; i < exponent; ++i) q = map[q];
    out.push_back(q);
  }
  return out;
}

namespace {

bool moves_something(std::span<const StateId> subset, std::span<const StateId> mapping) {
  for (std::size_t i = 0; i < subset.size(); ++i)
    if (subset[i] != mapping[i]) return true;
  return false;
}

std::vector<StateId> image_set(std::span<const StateId> map, const std::vector<StateId>& set) {
  std::vector<StateId> out;
  for (StateId p : set) out.push_back(map[p]);
  return sorted_unique(std::move(out));
}

}  // namespace

LemmaWitness permutation_lemma_check(std::span<const StateId> pi1, std::span<const StateId> pi2,
                                     std::span<const StateId> subset) {
  const std::size_t n = pi1.size();
  if (pi2.size() != n) throw PreconditionError("maps have different domains");
  for (StateId q = 0; q < n; ++q) {
    if (pi1[q] >= n || pi2[q] >= n) throw PreconditionError("map image out of range");
    if (pi1[pi2[q]] != pi2[pi1[q]]) throw PreconditionError("maps do not commute at " + std::to_string(q));
  }
  std::vector<StateId> P = sorted_unique({subset.begin(), subset.end()});
  for (StateId p : P)
    if (p >= n) throw PreconditionError("subset element out of range");
  std::vector<StateId> composite;
  for (StateId p : P) composite.push_back(pi2[pi1[p]]);
  if (!is_permutation_of(P, composite) || !moves_something(P, composite))
    throw PreconditionError("composite map is not a non-trivial permutation of the subset");

  // Period d of the set sequence P, pi1(P), pi1^2(P), ...; P lies on the
  // cycle because pi1^d permutes P.
  std::vector<std::vector<StateId>> seen{P};
  std::size_t d = 0;
  for (std::vector<StateId> cur = image_set(pi1, P);; cur = image_set(pi1, cur)) {
    auto it = std::find(seen.begin(), seen.end(), cur);
    if (it != seen.end()) {
      d = static_cast<std::size_t>(seen.end() - it);
      if (it != seen.begin()) throw ConsistencyError("subset is not periodic under the first map");
      break;
    }
    seen.push_back(cur);
  }

  auto power1 = apply_power(pi1, d, P);
  auto power2 = apply_power(pi2, d, P);
  if (!is_permutation_of(P, power1) || !is_permutation_of(P, power2))
    throw ConsistencyError("powers of the factors do not permute the subset");
  if (moves_something(P, power1)) return {d, LemmaFactor::first, P};
  if (moves_something(P, power2)) return {d, LemmaFactor::second, P};

  // Both powers are the identity on P, so d >= 2 and pi1 moves some p out of
  // P; pi1 then cycles the orbit of p, which has at most d elements.
  for (StateId p : P) {
    if (std::binary_search(P.begin(), P.end(), pi1[p])) continue;
    std::vector<StateId> orbit{p};
    for (StateId x = pi1[p]; x != p; x = pi1[x]) orbit.push_back(x);
    return {1, LemmaFactor::first, sorted_unique(std::move(orbit))};
  }
  throw ConsistencyError("no element leaves the subset under the first map");
}

}  // namespace biaut
