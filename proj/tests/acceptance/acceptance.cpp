// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "biaut/classify.hpp"
#include "biaut/construct.hpp"
#include "biaut/oracle.hpp"
#include "biaut/regex.hpp"
#include "biaut/semigroup.hpp"
#include "biaut/structure.hpp"
#include "support.hpp"

namespace {

using namespace biaut;
using support::Language;

struct Outcome {
  bool pass;
  std::string detail;
};

const Alphabet kAb("ab");

Dfa lang(const std::string& regex) { return compile_regex(regex, kAb); }

// Injectivity of every letter map, checked directly on the tables.
bool injective_dfa(const Dfa& d) {
  for (std::size_t a = 0; a < d.num_symbols(); ++a) {
    std::vector<bool> hit(d.num_states(), false);
    for (StateId q = 0; q < d.num_states(); ++q) {
      if (hit[d.next(q, a)]) return false;
      hit[d.next(q, a)] = true;
    }
  }
  return true;
}

bool injective_bia(const Bia& b) {
  for (std::size_t a = 0; a < b.num_symbols(); ++a)
    for (bool fwd : {true, false}) {
      std::vector<bool> hit(b.num_states(), false);
      for (StateId q = 0; q < b.num_states(); ++q) {
        StateId t = fwd ? b.fwd(q, a) : b.bwd(q, a);
        if (hit[t]) return false;
        hit[t] = true;
      }
    }
  return true;
}

Outcome criterion_1() {
  std::size_t mismatches = 0, checked = 0, regex_mismatches = 0;
  auto words = support::words_up_to(kAb, 8);
  for (const Language& l : support::sample_languages()) {
    Bia b = minimal_bia_of(l.dfa);
    for (const Word& w : words) {
      ++checked;
      if (accepts(b, w) != accepts(l.dfa, w)) ++mismatches;
    }
  }
  for (const auto& p : support::worked_regexes()) {
    RegexAst ast = parse_regex(p.regex, kAb);
    Bia b = minimal_bia_of(regex_to_dfa(ast, kAb));
    for (const Word& w : words)
      if (accepts(b, w) != support::regex_member(ast, w)) ++regex_mismatches;
  }
  std::ostringstream d;
  d << "38 languages, " << checked << " word checks, " << mismatches << " mismatches; " << regex_mismatches
    << " mismatches against the expression interpreter";
  return {mismatches == 0 && regex_mismatches == 0, d.str()};
}

Outcome criterion_2() {
  std::size_t runs = 0, violations = 0, largest = 0;
  std::mt19937 rng(support::kSeed + 2);
  for (const Language& l : support::sample_languages())
    for (const Dfa& input : {l.dfa, support::blow_up(l.dfa, rng)}) {
      Dfa reversed = reverse_dfa(input);
      // cross_product asserts the bound itself; the count is re-checked here.
      CrossProduct cp = cross_product(input, reversed);
      ++runs;
      largest = std::max(largest, cp.bia.num_states());
      if (cp.bia.num_states() > input.num_states() * reversed.num_states()) ++violations;
    }
  std::ostringstream d;
  d << runs << " cross products, " << violations << " above n*m, largest " << largest << " states";
  return {violations == 0, d.str()};
}

Outcome criterion_3() {
  std::mt19937 rng(support::kSeed + 3);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  std::vector<Bia> generated;
  std::size_t built = 0, failures = 0;
  while (built < 10) {
    Dfa d = minimize_dfa(support::random_permutation_dfa(rng, size(rng), kAb));
    Dfa r = reverse_dfa(d);
    if (!injective_dfa(d) || !injective_dfa(r)) {
      ++failures;  // minimal DFA or reversal of a permutation language lost injectivity
      ++built;
      continue;
    }
    Bia b = cross_product(d, r).bia;
    if (!is_permutation_bia(b).holds || !injective_bia(b)) ++failures;
    generated.push_back(b);
    ++built;
  }
  for (const Language& l : support::sample_languages()) {
    generated.push_back(cross_product(l.dfa, reverse_dfa(l.dfa)).bia);
    generated.push_back(minimal_bia_of(l.dfa));
  }
  std::size_t permutation_bias = 0, converse_failures = 0;
  for (const Bia& b : generated) {
    if (!is_permutation_bia(b).holds) continue;
    ++permutation_bias;
    Dfa f = extract_fwd(b);
    if (!is_permutation_dfa(f).holds || !injective_dfa(f)) ++converse_failures;
  }
  std::ostringstream d;
  d << "10 permutation DFAs, " << failures << " failures; " << permutation_bias << " of " << generated.size()
    << " biautomata are permutation biautomata, " << converse_failures << " converse failures";
  return {failures == 0 && converse_failures == 0, d.str()};
}

Outcome criterion_4() {
  std::size_t disagreements = 0, oracle_disagreements = 0, star_free = 0;
  for (const Language& l : support::sample_languages()) {
    Bia b = minimal_bia_of(l.dfa);
    bool dfa_pf = is_permutation_free(l.dfa).holds;
    bool bia_pf = is_permutation_free(b).holds;
    if (dfa_pf != bia_pf) ++disagreements;
    if (dfa_pf == support::naive_has_nontrivial_permutation(support::word_maps(l.dfa))) ++oracle_disagreements;
    if (bia_pf == support::naive_has_nontrivial_permutation(support::word_maps(b))) ++oracle_disagreements;
    star_free += dfa_pf;
  }
  std::ostringstream d;
  d << "38 languages (" << star_free << " star-free), " << disagreements << " DFA/biautomaton disagreements, "
    << oracle_disagreements << " disagreements with the brute-force oracle";
  return {disagreements == 0 && oracle_disagreements == 0, d.str()};
}

// The state reached from q0 by reading `word` with the given heads.
StateId run_heads(const Bia& b, StateId q, std::string_view word, std::string_view heads) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    std::size_t a = b.alphabet().require(word[i]);
    q = heads[i] == 'f' ? b.fwd(q, a) : b.bwd(q, a);
  }
  return q;
}

Outcome criterion_5() {
  Bia b = minimal_bia_of(lang("(aab|bab)*"));
  std::ostringstream d;
  bool ok = true;
  bool pf = is_permutation_free(b).holds;
  ok &= pf;
  d << b.num_states() << "-state minimal biautomaton, permutation-free " << (pf ? "yes" : "no");

  auto wc = find_word_cycle(b, 2);
  bool wc_ok = wc && wc->word == "ab" && wc->cycle.size() == 3;
  if (wc_ok) {
    for (std::size_t i = 0; i < 3; ++i) {
      std::string_view w = wc->word;
      wc_ok &= b.read(wc->cycle[i], w.substr(0, wc->splits[i]), w.substr(wc->splits[i])) == wc->cycle[(i + 1) % 3];
    }
    // Known cycle: q6 = q0 o ab, q1 = (q6 . a) o b, q1 . ab = q0.
    StateId q0 = b.initial();
    StateId q6 = b.read(q0, "", "ab");
    StateId q1 = b.read(q6, "a", "b");
    std::vector<StateId> expected{q0, q6, q1}, got = wc->cycle;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    wc_ok &= b.read(q1, "ab", "") == q0 && expected == got;
  }
  ok &= wc_ok;
  d << "; word-cycle " << (wc ? wc->word + " of length " + std::to_string(wc->cycle.size()) : "none")
    << (wc_ok ? " (matches)" : " (mismatch)");

  auto gc = find_graph_cycle(b, 2);
  bool gc_ok = gc && gc->word == "ab" && gc->cycle.size() == 3;
  if (gc_ok) {
    for (std::size_t i = 0; i < 3; ++i) {
      std::string heads;
      for (Direction dir : gc->heads[i]) heads += dir == Direction::forward ? 'f' : 'b';
      gc_ok &= run_heads(b, gc->cycle[i], gc->word, heads) == gc->cycle[(i + 1) % 3];
    }
    // Known graph-cycle: (q0 . a) o b = q4, (q4 . a) . b = q3, (q3 o a) o b = q0.
    StateId q0 = b.initial();
    StateId q4 = run_heads(b, q0, "ab", "fb");
    StateId q3 = run_heads(b, q4, "ab", "ff");
    gc_ok &= run_heads(b, q3, "ab", "bb") == q0 && q0 != q4 && q4 != q3 && q3 != q0;
  }
  ok &= gc_ok;
  d << "; graph-cycle " << (gc ? gc->word + " of length " + std::to_string(gc->cycle.size()) : "none")
    << (gc_ok ? " (matches)" : " (mismatch)");
  return {ok, d.str()};
}

bool dfa_attractor_surrogate(const Dfa& d) {
  for (const Word& w : support::words_up_to(kAb, 3)) {
    if (w.empty()) continue;
    bool some = false;
    for (StateId q = 0; q < d.num_states() && !some; ++q) some = is_w_attractor(d, w, q);
    if (!some) return false;
  }
  return true;
}

bool bia_attractor_surrogate(const Bia& b) {
  auto words = support::words_up_to(kAb, 3);
  for (StateId s = 0; s < b.num_states(); ++s) {
    bool all = true;
    for (const Word& u : words)
      for (const Word& v : words)
        if (all && !u.empty() + !v.empty() > 0 && u.size() + v.size() <= 3) all = is_uv_attractor(b, u, v, s);
    if (all) return true;
  }
  return false;
}

Outcome criterion_6() {
  std::size_t exact_disagreements = 0, surrogate_contradictions = 0, definite = 0, finite_cofinite = 0;
  for (const Language& l : support::sample_languages()) {
    bool ae = all_states_almost_equivalent(l.dfa).holds;
    bool spf = is_strongly_permutation_free(l.dfa).holds;
    bool family = support::naive_definite(l.dfa);
    bool cls = is_definite(l.dfa).holds;
    if (ae != spf || spf != family || family != cls) ++exact_disagreements;
    if (family && !dfa_attractor_surrogate(l.dfa)) ++surrogate_contradictions;
    definite += family;

    Bia b = minimal_bia_of(l.dfa);
    bool bae = all_states_almost_equivalent(b).holds;
    bool bspf = is_strongly_permutation_free(b).holds;
    bool bfamily = support::naive_finite(l.dfa) || support::naive_cofinite(l.dfa);
    bool cross = !support::naive_has_large_permutation(support::word_maps(b));
    if (bae != bspf || bspf != bfamily || bfamily != cross) ++exact_disagreements;
    if (bfamily && !bia_attractor_surrogate(b)) ++surrogate_contradictions;
    finite_cofinite += bfamily;
  }
  std::ostringstream d;
  d << "38 languages (" << definite << " definite, " << finite_cofinite << " finite or co-finite), "
    << exact_disagreements << " exact disagreements, " << surrogate_contradictions << " surrogate contradictions";
  return {exact_disagreements == 0 && surrogate_contradictions == 0, d.str()};
}

Outcome criterion_7() {
  Dfa d = lang("(a|b)*ab(a|b)*");
  Bia b = minimal_bia_of(d);
  auto dfa_order = find_total_order(d);
  auto bia_order = find_total_order(b);
  bool ok = d.num_states() == 3 && dfa_order && certifies_order(d, *dfa_order) && !bia_order;
  std::ostringstream s;
  s << "DFA (" << d.num_states() << " states) order " << (dfa_order ? "found" : "missing") << "; biautomaton ("
    << b.num_states() << " states) order " << (bia_order ? "found" : "absent after exhaustive search");
  return {ok, s.str()};
}

Outcome criterion_8() {
  std::ostringstream s;
  bool ok = true;
  OrderedBia ob = build_ordered_bia_finite({"ab"}, kAb);
  bool exact = true;
  for (const Word& w : support::words_up_to(kAb, 6)) exact &= accepts(ob.bia, w) == (w == "ab");
  bool finite = is_acyclic(ob.bia, SinkAllowance::non_accepting).holds;
  bool valid = validate_bia(ob.bia.tables()).ok();
  bool certified = certifies_order(ob.bia, ob.order);
  ok &= exact && finite && valid && certified && ob.bia.num_states() == 18;
  s << "{ab}: " << ob.bia.num_states() << " states, valid " << valid << ", order certified " << certified
    << ", language exact " << (exact && finite);

  auto fig3 = find_total_order(minimal_bia_of(lang("a*|b")));
  ok &= fig3.has_value();
  s << "; a*|b biautomaton order " << (fig3 ? "found" : "missing");
  auto ab = find_total_order(lang("ab"));
  ok &= !ab.has_value();
  s << "; {ab} DFA order " << (ab ? "found" : "absent");

  std::size_t checked = 0, mismatches = 0;
  for (const Word& w : support::words_up_to(kAb, 4)) {
    if (w.empty()) continue;
    bool unary = std::all_of(w.begin(), w.end(), [&](char c) { return c == w[0]; });
    bool ordered = find_total_order(lang(w)).has_value();
    ++checked;
    if (ordered != unary) ++mismatches;
  }
  ok &= mismatches == 0;
  s << "; single words: " << checked << " checked, " << mismatches << " mismatches";
  return {ok, s.str()};
}

Outcome criterion_9() {
  std::mt19937 rng(support::kSeed + 9);
  std::vector<Bia> bias;
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<std::size_t> word_len(0, 3);
  std::uniform_int_distribution<int> pick(0, 1);
  while (bias.size() < 50) {
    Bia b = [&]() -> Bia {
      switch (bias.size() % 3) {
        case 0: {
          Dfa d = support::random_dfa(rng, size(rng), kAb);
          return cross_product(d, reverse_dfa(d)).bia;
        }
        case 1:
          return minimal_bia_of(support::random_dfa(rng, size(rng), kAb));
        default: {
          std::vector<Word> words;
          for (std::size_t i = 0, n = 1 + pick(rng); i < n; ++i) {
            Word w;
            for (std::size_t j = 0, len = word_len(rng); j < len; ++j) w += kAb[pick(rng)];
            words.push_back(w);
          }
          return build_ordered_bia_finite(words, kAb).bia;
        }
      }
    }();
    Dfa language = minimize_dfa(extract_fwd(b));
    if (language.num_states() == 1 && !language.is_accepting(0)) continue;
    bias.push_back(b);
  }
  std::size_t non_exiting = 0, exceptions = 0;
  for (const Bia& b : bias) {
    if (!is_non_exiting(b).holds) continue;
    ++non_exiting;
    if (!is_non_returning(b).holds) ++exceptions;
  }
  Bia a_aa = minimal_bia_of(lang("a|aa"));
  bool a_aa_ok = is_non_returning(a_aa).holds && !is_non_exiting(a_aa).holds;
  Dfa abstar = lang("ab*");
  bool abstar_ok = is_non_returning(abstar).holds && !is_non_returning(minimal_bia_of(abstar)).holds;
  std::ostringstream s;
  s << "50 biautomata, " << non_exiting << " non-exiting, " << exceptions << " exceptions; a|aa "
    << (a_aa_ok ? "ok" : "wrong") << "; ab* " << (abstar_ok ? "ok" : "wrong");
  return {exceptions == 0 && a_aa_ok && abstar_ok, s.str()};
}

Outcome criterion_10() {
  std::size_t finite = 0, disagreements = 0, bad_witnesses = 0, negatives = 0;
  for (const Language& l : support::sample_languages()) {
    if (!support::naive_finite(l.dfa)) continue;
    ++finite;
    auto exact = is_circumfix_free(l.dfa);
    auto bounded = circumfix_free_up_to(enumerate(l.dfa, 8));
    if (exact.holds != bounded.holds) ++disagreements;
    if (!exact.holds) {
      ++negatives;
      const auto& p = *exact.pair;
      bool replay = p.longer != p.shorter && accepts(l.dfa, p.longer) && accepts(l.dfa, p.shorter) &&
                    is_circumfix_of(p.shorter, p.longer);
      if (!replay) ++bad_witnesses;
    }
  }
  // Random finite word sets widen the negative side beyond the sample set.
  std::mt19937 rng(support::kSeed + 10);
  std::uniform_int_distribution<std::size_t> count(1, 4), len(0, 4);
  std::uniform_int_distribution<int> letter(0, 1);
  for (int i = 0; i < 60; ++i) {
    std::vector<Word> words;
    for (std::size_t j = 0, n = count(rng); j < n; ++j) {
      Word w;
      for (std::size_t k = 0, m = len(rng); k < m; ++k) w += kAb[letter(rng)];
      words.push_back(w);
    }
    Dfa d = minimize_dfa(extract_fwd(build_ordered_bia_finite(words, kAb).bia));
    ++finite;
    auto exact = is_circumfix_free(d);
    auto bounded = circumfix_free_up_to(enumerate(d, 8));
    if (exact.holds != bounded.holds) ++disagreements;
    if (!exact.holds) {
      ++negatives;
      const auto& p = *exact.pair;
      bool member_long = std::find(words.begin(), words.end(), p.longer) != words.end();
      bool member_short = std::find(words.begin(), words.end(), p.shorter) != words.end();
      if (!(p.longer != p.shorter && member_long && member_short && is_circumfix_of(p.shorter, p.longer)))
        ++bad_witnesses;
    }
  }
  std::ostringstream s;
  s << finite << " finite languages, " << negatives << " not circumfix-free, " << disagreements
    << " disagreements, " << bad_witnesses << " unreplayable pairs";
  return {finite > 0 && disagreements == 0 && bad_witnesses == 0, s.str()};
}

Outcome criterion_11() {
  std::mt19937 rng(support::kSeed + 11);
  auto samples = support::sample_languages();
  std::size_t pairs = 0, non_isomorphic = 0;
  for (const Language& l : samples) {
    if (pairs == 10) break;
    if (l.dfa.num_states() < 2) continue;
    Dfa other = support::blow_up(l.dfa, rng);
    for (int tries = 0; tries < 20 && other.num_states() == l.dfa.num_states(); ++tries)
      other = support::blow_up(l.dfa, rng);
    if (other.num_states() == l.dfa.num_states()) continue;
    ++pairs;
    if (!bia_isomorphic(minimal_bia_of(l.dfa), minimal_bia_of(other))) ++non_isomorphic;
  }
  std::size_t idempotence_failures = 0, checked = 0;
  for (const Language& l : samples)
    for (const Bia& b : {cross_product(l.dfa, reverse_dfa(l.dfa)).bia, minimal_bia_of(l.dfa)}) {
      Bia once = minimize_bia(b);
      ++checked;
      if (!(minimize_bia(once) == once)) ++idempotence_failures;
    }
  std::ostringstream s;
  s << pairs << " language pairs, " << non_isomorphic << " non-isomorphic results; " << checked
    << " idempotence checks, " << idempotence_failures << " failures";
  return {pairs == 10 && non_isomorphic == 0 && idempotence_failures == 0, s.str()};
}

struct CommutingCase {
  std::vector<StateId> pi1, pi2, subset;
};

std::vector<StateId> compose_power(const std::vector<StateId>& tau, std::size_t k) {
  std::vector<StateId> out(tau.size());
  std::iota(out.begin(), out.end(), StateId{0});
  for (std::size_t i = 0; i < k; ++i)
    for (auto& x : out) x = tau[x];
  return out;
}

std::optional<CommutingCase> make_commuting_case(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> npick(2, 6);
  const std::size_t n = npick(rng);
  std::uniform_int_distribution<std::size_t> split(0, n);
  const std::size_t cut = split(rng);
  std::uniform_int_distribution<std::size_t> exp(0, 3);
  std::vector<StateId> pi1(n), pi2(n);
  // Two blocks [0, cut) and [cut, n), each with powers of its own random map.
  for (auto [lo, hi] : {std::pair{std::size_t{0}, cut}, std::pair{cut, n}}) {
    if (lo == hi) continue;
    std::uniform_int_distribution<StateId> target(static_cast<StateId>(lo), static_cast<StateId>(hi - 1));
    std::vector<StateId> tau(n);
    std::iota(tau.begin(), tau.end(), StateId{0});
    std::bernoulli_distribution bijective(0.6);
    if (bijective(rng)) {
      std::vector<StateId> perm(hi - lo);
      std::iota(perm.begin(), perm.end(), static_cast<StateId>(lo));
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = lo; i < hi; ++i) tau[i] = perm[i - lo];
    } else {
      for (std::size_t i = lo; i < hi; ++i) tau[i] = target(rng);
    }
    auto p1 = compose_power(tau, exp(rng)), p2 = compose_power(tau, exp(rng));
    for (std::size_t i = lo; i < hi; ++i) pi1[i] = p1[i], pi2[i] = p2[i];
  }
  std::vector<StateId> composite(n);
  for (std::size_t q = 0; q < n; ++q) composite[q] = pi2[pi1[q]];
  // P: the union of a random selection of composite cycles, at least one of
  // them non-trivial.
  std::vector<bool> seen(n, false);
  std::vector<StateId> subset;
  bool nontrivial = false;
  std::bernoulli_distribution take(0.7);
  for (StateId p = 0; p < n; ++p) {
    if (seen[p]) continue;
    std::vector<StateId> cycle{p};
    StateId x = composite[p];
    while (x != p && cycle.size() <= n) cycle.push_back(x), x = composite[x];
    if (x != p) continue;
    for (StateId c : cycle) seen[c] = true;
    if (!take(rng)) continue;
    subset.insert(subset.end(), cycle.begin(), cycle.end());
    nontrivial |= cycle.size() >= 2;
  }
  if (!nontrivial) return std::nullopt;
  std::sort(subset.begin(), subset.end());
  return CommutingCase{pi1, pi2, subset};
}

Outcome criterion_12() {
  std::mt19937 rng(support::kSeed + 12);
  std::size_t cases = 0, invalid = 0, second_factor = 0, larger_exponent = 0;
  while (cases < 100) {
    auto c = make_commuting_case(rng);
    if (!c) continue;
    ++cases;
    try {
      LemmaWitness w = permutation_lemma_check(c->pi1, c->pi2, c->subset);
      const auto& map = w.factor == LemmaFactor::first ? c->pi1 : c->pi2;
      auto power = compose_power(map, w.exponent);
      std::vector<StateId> image;
      bool moves = false;
      for (StateId p : w.subset) {
        image.push_back(power[p]);
        moves |= power[p] != p;
      }
      std::vector<StateId> sorted_image = image;
      std::sort(sorted_image.begin(), sorted_image.end());
      std::vector<StateId> sorted_subset = w.subset;
      std::sort(sorted_subset.begin(), sorted_subset.end());
      bool valid = w.exponent >= 1 && !w.subset.empty() && sorted_image == sorted_subset &&
                   std::adjacent_find(sorted_subset.begin(), sorted_subset.end()) == sorted_subset.end() && moves;
      if (!valid) ++invalid;
      second_factor += w.factor == LemmaFactor::second;
      larger_exponent += w.exponent > 1;
    } catch (const std::exception&) {
      ++invalid;
    }
  }
  std::ostringstream s;
  s << cases << " commuting pairs, " << invalid << " invalid witnesses (" << second_factor
    << " via the second map, " << larger_exponent << " with exponent > 1)";
  return {invalid == 0, s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"minimal biautomaton language equals DFA language (38 languages, length <= 8)", criterion_1},
      {"cross product has at most n*m states", criterion_2},
      {"permutation DFAs give permutation biautomata, and conversely", criterion_3},
      {"permutation-freeness agrees between minimal DFA and minimal biautomaton", criterion_4},
      {"(aab|bab)*: permutation-free, word-cycle and graph-cycle on ab", criterion_5},
      {"almost-equivalence, strong permutation-freeness and family membership agree", criterion_6},
      {"total order exists for the minimal DFA of (a|b)*ab(a|b)* but not its biautomaton", criterion_7},
      {"ordered biautomaton for finite languages and single-word orderability", criterion_8},
      {"non-exiting implies non-returning; a|aa and ab* examples", criterion_9},
      {"circumfix-freeness agrees with the bounded oracle on finite languages", criterion_10},
      {"minimal biautomaton is unique up to isomorphism; minimization idempotent", criterion_11},
      {"commuting maps: a power of one factor permutes a set non-trivially", criterion_12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s criterion %2zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
