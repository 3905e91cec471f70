#include "support.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "biaut/dfa.hpp"

namespace support {

const std::vector<WorkedLanguage>& worked_regexes() {
  static const std::vector<WorkedLanguage> langs{
      {"empty", "\\0"},
      {"sigma-star", "(a|b)*"},
      {"a|aa", "a|aa"},
      {"ab", "ab"},
      {"ab*", "ab*"},
      {"a*|b", "a*|b"},
      {"sigma-star-ab-sigma-star", "(a|b)*ab(a|b)*"},
      {"(aab|bab)*", "(aab|bab)*"},
  };
  return langs;
}

std::vector<Language> worked_languages() {
  std::vector<Language> out;
  for (const auto& l : worked_regexes()) out.push_back({l.name, biaut::compile_regex(l.regex, Alphabet("ab"))});
  return out;
}

Dfa random_dfa(std::mt19937& rng, std::size_t num_states, const Alphabet& alphabet, double accept_probability) {
  std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(num_states - 1));
  std::bernoulli_distribution accept(accept_probability);
  std::vector<bool> accepting(num_states);
  for (std::size_t q = 0; q < num_states; ++q) accepting[q] = accept(rng);
  std::vector<StateId> delta(num_states * alphabet.size());
  for (auto& t : delta) t = pick(rng);
  return Dfa(alphabet, num_states, 0, accepting, delta);
}

Dfa random_permutation_dfa(std::mt19937& rng, std::size_t num_states, const Alphabet& alphabet) {
  std::bernoulli_distribution accept(0.5);
  std::vector<bool> accepting(num_states);
  for (std::size_t q = 0; q < num_states; ++q) accepting[q] = accept(rng);
  std::vector<StateId> delta(num_states * alphabet.size());
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    std::vector<StateId> perm(num_states);
    std::iota(perm.begin(), perm.end(), StateId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t q = 0; q < num_states; ++q) delta[q * alphabet.size() + a] = perm[q];
  }
  return Dfa(alphabet, num_states, 0, accepting, delta);
}

std::vector<Language> random_languages(std::size_t count, std::size_t max_states, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_states);
  std::vector<Language> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({"random-" + std::to_string(i), biaut::minimize_dfa(random_dfa(rng, size(rng), Alphabet("ab")))});
  return out;
}

std::vector<Language> sample_languages() {
  auto out = worked_languages();
  auto random = random_languages(30);
  out.insert(out.end(), random.begin(), random.end());
  return out;
}

Dfa blow_up(const Dfa& dfa, std::mt19937& rng) {
  const std::size_t n = dfa.num_states(), k = dfa.num_symbols();
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> accepting(2 * n);
  std::vector<StateId> delta(2 * n * k);
  for (StateId q = 0; q < 2 * n; ++q) {
    accepting[q] = dfa.is_accepting(q % n);
    for (std::size_t a = 0; a < k; ++a)
      delta[q * k + a] = dfa.next(q % n, a) + (coin(rng) ? static_cast<StateId>(n) : 0);
  }
  // Keep the reachable part so the copy stays connected.
  std::vector<StateId> id(2 * n, ~StateId{0});
  std::vector<StateId> order{0};
  id[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      StateId t = delta[order[i] * k + a];
      if (id[t] == ~StateId{0}) id[t] = static_cast<StateId>(order.size()), order.push_back(t);
    }
  std::vector<bool> acc2;
  std::vector<StateId> delta2;
  for (StateId q : order) {
    acc2.push_back(accepting[q]);
    for (std::size_t a = 0; a < k; ++a) delta2.push_back(id[delta[q * k + a]]);
  }
  return Dfa(dfa.alphabet(), order.size(), 0, acc2, delta2);
}

namespace {

class Interpreter {
 public:
  explicit Interpreter(std::string_view w) : w_(w), n_(w.size() + 1) {}

  bool match(const biaut::RegexAst& node, std::size_t i, std::size_t j) {
    auto& memo = memo_[&node];
    if (memo.empty()) memo.assign(n_ * n_, -1);
    auto& slot = memo[i * n_ + j];
    if (slot >= 0) return slot;
    using K = biaut::RegexAst::Kind;
    bool r = false;
    switch (node.kind) {
      case K::empty_set:
        r = false;
        break;
      case K::empty_word:
        r = i == j;
        break;
      case K::symbol:
        r = j == i + 1 && w_[i] == node.symbol;
        break;
      case K::alternation:
        r = match(node.children[0], i, j) || match(node.children[1], i, j);
        break;
      case K::concatenation:
        for (std::size_t m = i; m <= j && !r; ++m) r = match(node.children[0], i, m) && match(node.children[1], m, j);
        break;
      case K::star:
        r = i == j;
        for (std::size_t m = i + 1; m <= j && !r; ++m) r = match(node.children[0], i, m) && match(node, m, j);
        break;
      case K::complement:
        r = !match(node.children[0], i, j);
        break;
    }
    slot = r;
    return r;
  }

 private:
  std::string_view w_;
  std::size_t n_;
  std::map<const biaut::RegexAst*, std::vector<int>> memo_;
};

template <typename Step>
std::set<std::vector<StateId>> closure(std::size_t n, std::size_t generators, Step step) {
  std::set<std::vector<StateId>> seen;
  std::deque<std::vector<StateId>> queue;
  std::vector<StateId> identity(n);
  std::iota(identity.begin(), identity.end(), StateId{0});
  auto push = [&](std::vector<StateId> m) {
    if (seen.insert(m).second) queue.push_back(std::move(m));
  };
  for (std::size_t g = 0; g < generators; ++g) push(step(identity, g));
  while (!queue.empty()) {
    auto m = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < generators; ++g) push(step(m, g));
  }
  return seen;
}

// States lying on a cycle of the functional graph of `m`, and the length of
// the longest such cycle.
std::pair<std::size_t, std::size_t> cyclic_states(const std::vector<StateId>& m) {
  std::size_t cyclic = 0, longest = 0;
  for (StateId p = 0; p < m.size(); ++p) {
    StateId x = m[p];
    std::size_t len = 1;
    while (x != p && len <= m.size()) x = m[x], ++len;
    if (x == p) ++cyclic, longest = std::max(longest, len);
  }
  return {cyclic, longest};
}

}  // namespace

bool regex_member(const biaut::RegexAst& ast, std::string_view word) {
  return Interpreter(word).match(ast, 0, word.size());
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t bound) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == bound) continue;
    for (char c : alphabet.symbols()) out.push_back(out[i] + c);
  }
  return out;
}

std::set<std::vector<StateId>> word_maps(const Dfa& dfa) {
  return closure(dfa.num_states(), dfa.num_symbols(), [&](const std::vector<StateId>& m, std::size_t a) {
    std::vector<StateId> out(m.size());
    for (std::size_t q = 0; q < m.size(); ++q) out[q] = dfa.next(m[q], a);
    return out;
  });
}

std::set<std::vector<StateId>> word_maps(const Bia& bia) {
  const std::size_t k = bia.num_symbols();
  return closure(bia.num_states(), 2 * k, [&](const std::vector<StateId>& m, std::size_t g) {
    std::vector<StateId> out(m.size());
    for (std::size_t q = 0; q < m.size(); ++q) out[q] = g < k ? bia.fwd(m[q], g) : bia.bwd(m[q], g - k);
    return out;
  });
}

bool naive_has_nontrivial_permutation(const std::set<std::vector<StateId>>& maps) {
  return std::any_of(maps.begin(), maps.end(), [](const auto& m) { return cyclic_states(m).second >= 2; });
}

bool naive_has_large_permutation(const std::set<std::vector<StateId>>& maps) {
  return std::any_of(maps.begin(), maps.end(), [](const auto& m) { return cyclic_states(m).first >= 2; });
}

namespace {

bool accepts_some_length(const Dfa& dfa, std::size_t from, std::size_t to, bool want) {
  for (std::size_t len = from; len < to; ++len) {
    std::vector<Word> words{Word{}};
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Word> next;
      for (const Word& w : words)
        for (char c : dfa.alphabet().symbols()) next.push_back(w + c);
      words = std::move(next);
    }
    for (const Word& w : words)
      if (dfa.is_accepting(dfa.read(dfa.initial(), w)) == want) return true;
  }
  return false;
}

}  // namespace

bool naive_finite(const Dfa& dfa) {
  std::size_t n = dfa.num_states();
  return !accepts_some_length(dfa, n, 2 * n, true);
}

bool naive_cofinite(const Dfa& dfa) {
  std::size_t n = dfa.num_states();
  return !accepts_some_length(dfa, n, 2 * n, false);
}

bool naive_definite(const Dfa& dfa) {
  const std::size_t n = dfa.num_states();
  // Depth-first search for a cycle among off-diagonal unordered pairs.
  std::vector<int> color(n * n, 0);
  std::function<bool(StateId, StateId)> cyclic = [&](StateId p, StateId q) {
    int& c = color[p * n + q];
    if (c == 1) return true;
    if (c == 2) return false;
    c = 1;
    for (std::size_t a = 0; a < dfa.num_symbols(); ++a) {
      StateId x = dfa.next(p, a), y = dfa.next(q, a);
      if (x == y) continue;
      if (cyclic(std::min(x, y), std::max(x, y))) return true;
    }
    c = 2;
    return false;
  };
  for (StateId p = 0; p < n; ++p)
    for (StateId q = p + 1; q < n; ++q)
      if (cyclic(p, q)) return false;
  return true;
}

}  // namespace support
