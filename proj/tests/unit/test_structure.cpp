#include "biaut/structure.hpp"

#include <algorithm>
#include <random>

#include "biaut/construct.hpp"
#include "biaut/error.hpp"
#include "biaut/regex.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace biaut;

namespace {

const Alphabet kAb("ab");
Dfa lang(const char* r) { return compile_regex(r, kAb); }

// Exhaustive order search over all permutations of the states.
bool brute_force_orderable(const TransitionSystem& sys) {
  std::vector<StateId> order(sys.num_states);
  for (StateId i = 0; i < order.size(); ++i) order[i] = i;
  do {
    if (certifies_order(sys, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

TEST_CASE("acyclicity with sink allowances") {
  CHECK(is_acyclic(lang("a|aa"), SinkAllowance::non_accepting).holds);
  CHECK_FALSE(is_acyclic(lang("a*"), SinkAllowance::non_accepting).holds);
  CHECK_FALSE(is_acyclic(lang("~(ab)"), SinkAllowance::non_accepting).holds);
  CHECK(is_acyclic(lang("~(ab)"), SinkAllowance::accepting).holds);
  CHECK(is_acyclic(lang("~(ab)"), SinkAllowance::both).holds);
  auto v = is_acyclic(lang("(ab)*"), SinkAllowance::both);
  REQUIRE_FALSE(v.holds);
  CHECK(v.cycle.size() == v.letters.size());
  CHECK(v.cycle.size() >= 2);
}

TEST_CASE("partial order") {
  CHECK(is_partially_ordered(lang("(a|b)*ab(a|b)*")).holds);
  CHECK(is_partially_ordered(lang("a*b*")).holds);
  CHECK_FALSE(is_partially_ordered(lang("(ab)*")).holds);
}

TEST_CASE("order search agrees with exhaustive search") {
  std::mt19937 rng(support::kSeed);
  for (int i = 0; i < 60; ++i) {
    Dfa d = support::random_dfa(rng, 1 + i % 6, kAb);
    auto found = find_total_order(d);
    CHECK(found.has_value() == brute_force_orderable(d));
    if (found) CHECK(certifies_order(d, *found));
  }
  for (const auto& l : support::worked_languages()) {
    Bia b = minimal_bia_of(l.dfa);
    if (b.num_states() > 8) continue;
    CHECK(find_total_order(b).has_value() == brute_force_orderable(b));
  }
  CHECK_THROWS_AS(find_total_order(minimal_bia_of(lang("(aab|bab)*")), 5), CapError);
  CHECK_FALSE(certifies_order(lang("ab"), {0, 1}));
}

TEST_CASE("ordered biautomaton for finite languages") {
  OrderedBia ob = build_ordered_bia_finite({"ab"}, kAb);
  CHECK(ob.bia.num_states() == 18);
  CHECK(ob.labels.back() == "s");
  CHECK(ob.labels.front() == "(\\e,\\e)");
  CHECK(certifies_order(ob.bia, ob.order));

  std::vector<Word> words{"a", "ba", "abb"};
  OrderedBia many = build_ordered_bia_finite(words, kAb);
  OrderedBia co = build_ordered_bia_finite(words, kAb, true);
  for (const Word& w : support::words_up_to(kAb, 6)) {
    bool in = std::find(words.begin(), words.end(), w) != words.end();
    CHECK(accepts(many.bia, w) == in);
    CHECK(accepts(co.bia, w) != in);
  }
  CHECK(certifies_order(co.bia, co.order));
  CHECK_THROWS_AS(build_ordered_bia_finite({"abab"}, kAb, false, 10), CapError);
}

TEST_CASE("lexicographic comparison") {
  CHECK(lex_compare("a", "b", kAb) == std::strong_ordering::less);
  CHECK(lex_compare("b", "a", Alphabet("ba")) == std::strong_ordering::less);
  CHECK(lex_compare("ab", "ab", kAb) == std::strong_ordering::equal);
  CHECK(lex_compare("abb", "ab", kAb) == std::strong_ordering::greater);
}

TEST_CASE("exiting and returning transitions") {
  Bia a_aa = minimal_bia_of(lang("a|aa"));
  auto ex = is_non_exiting(a_aa);
  REQUIRE_FALSE(ex.holds);
  CHECK(a_aa.is_accepting(ex.offending->from));
  CHECK(is_non_returning(a_aa).holds);
  CHECK(is_non_exiting(lang("ab")).holds);
  auto ret = is_non_returning(lang("(ab)*"));
  REQUIRE_FALSE(ret.holds);
  CHECK(ret.offending->to == 0);
}

TEST_CASE("commutativity") {
  CHECK(is_commutative(lang("(a|b)*")).holds);
  CHECK(is_commutative(lang("(aa)*")).holds);
  auto v = is_commutative(lang("ab"));
  REQUIRE_FALSE(v.holds);
  CHECK(v.violation->a != v.violation->b);
  CHECK(is_commutative(minimal_bia_of(lang("(a|b)*"))).holds);
  CHECK_FALSE(is_commutative(minimal_bia_of(lang("ab"))).holds);
}

TEST_CASE("attractors") {
  Dfa aa = compile_regex("(aa)*", Alphabet("a"));
  // Every state reaches both states under some power of (. a).
  CHECK(is_w_attractor(aa, "a", 0));
  CHECK(is_w_attractor(aa, "a", 1));
  CHECK_FALSE(is_w_attractor(aa, "aa", 1));
  Dfa sig = lang("(a|b)*ab(a|b)*");
  StateId accept = sig.read(0, "ab");
  CHECK(is_w_attractor(sig, "ab", accept));
  CHECK_FALSE(is_w_attractor(sig, "a", accept));
  CHECK_THROWS_AS(is_w_attractor(sig, "", 0), PreconditionError);
  Bia b = minimal_bia_of(lang("a|aa"));
  StateId sink = b.read(0, "aaa", "");
  CHECK(is_uv_attractor(b, "a", "a", sink));
  CHECK(is_uv_attractor(b, "a", "", sink));
  CHECK_FALSE(is_uv_attractor(b, "a", "", b.initial()));
  Dfa aa_ab = lang("(aa)*");
  for (StateId q = 0; q < aa_ab.num_states(); ++q) CHECK_FALSE(is_w_attractor(aa_ab, "a", q));
  Dfa finite = lang("ab|b");
  StateId dead = finite.read(0, "bb");
  for (const Word& w : {"a", "b", "ab", "bba"}) CHECK(is_w_attractor(finite, w, dead));
  CHECK_THROWS_AS(is_uv_attractor(b, "", "", sink), PreconditionError);
}

TEST_CASE("almost-equivalence and synchronizing depth") {
  Dfa d = lang("(a|b)*ab");
  CHECK(all_states_almost_equivalent(d).holds);
  CHECK(synchronizing_depth(d).has_value());
  Dfa p = lang("(aa)*");
  auto v = all_states_almost_equivalent(p);
  REQUIRE_FALSE(v.holds);
  CHECK_FALSE(almost_equivalent(p, v.pair->first, v.pair->second));
  CHECK_FALSE(synchronizing_depth(p).has_value());
  CHECK(synchronizing_depth(lang("(a|b)*")) == 0);
  CHECK(synchronizing_depth(lang("(a|b)*a")) == 1);
  for (const auto& l : support::sample_languages())
    CHECK(synchronizing_depth(l.dfa).has_value() == support::naive_definite(l.dfa));
}
