#include "biaut/classify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

#include "biaut/construct.hpp"
#include "biaut/error.hpp"
#include "biaut/format.hpp"
#include "biaut/structure.hpp"

namespace biaut {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

DefiniteVerdict is_definite(const Dfa& dfa) {
  auto strong = is_strongly_permutation_free(dfa);
  auto depth = synchronizing_depth(dfa);
  if (strong.holds != depth.has_value())
    throw ConsistencyError("strong permutation-freeness disagrees with the synchronizing depth");
  return {strong.holds, depth, std::move(strong.evidence)};
}

PermutationFreeVerdict is_star_free(const Dfa& dfa, std::size_t cap) { return is_permutation_free(dfa, cap); }

PermutationVerdict is_p_regular(const Dfa& dfa) { return is_permutation(dfa); }

bool is_circumfix_of(std::string_view shorter, std::string_view longer) {
  if (shorter.size() >= longer.size()) return false;
  std::size_t prefix = 0;
  while (prefix < shorter.size() && shorter[prefix] == longer[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < shorter.size() && shorter[shorter.size() - 1 - suffix] == longer[longer.size() - 1 - suffix])
    ++suffix;
  return prefix + suffix >= shorter.size();
}

namespace {

CircumfixVerdict circumfix_from_bia(const Bia& bia) {
  auto exiting = is_non_exiting(bia);
  if (exiting.holds) return {true, std::nullopt};
  StateId q = exiting.offending->from;
  auto reach = reaching_pairs(bia);
  if (!reach[q]) throw ConsistencyError("exiting state is unreachable");
  // Shortest non-empty forward word leading from q into an accepting state.
  const std::size_t k = bia.num_symbols();
  std::vector<std::optional<Word>> found(bia.num_states());
  std::deque<StateId> queue;
  for (std::size_t a = 0; a < k; ++a) {
    StateId t = bia.fwd(q, a);
    if (!found[t]) found[t] = Word(1, bia.alphabet()[a]), queue.push_back(t);
  }
  while (!queue.empty()) {
    StateId x = queue.front();
    queue.pop_front();
    if (bia.is_accepting(x)) {
      const auto& [u, v] = *reach[q];
      CircumfixPair pair{u + *found[x] + v, u + v};
      if (!accepts(bia, pair.longer) || !accepts(bia, pair.shorter))
        throw ConsistencyError("reconstructed circumfix pair is not in the language");
      return {false, pair};
    }
    for (std::size_t a = 0; a < k; ++a) {
      StateId t = bia.fwd(x, a);
      if (!found[t]) found[t] = *found[x] + bia.alphabet()[a], queue.push_back(t);
    }
  }
  throw ConsistencyError("exiting state has no accepting continuation");
}

std::string state_list(const std::vector<StateId>& states) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) out += (i ? " q" : "q") + std::to_string(states[i]);
  return out;
}

std::string describe(const PermutationEvidence& e) {
  std::string out = "u=" + show_word(e.u);
  if (!e.v.empty()) out += " v=" + show_word(e.v);
  return out + " maps {" + state_list(e.subset) + "} to (" + state_list(e.mapping) + ")";
}

std::string describe(const TransitionSystem& sys, const TransitionRef& t) {
  return "q" + std::to_string(t.from) + " -" + letter_name(sys, t.letter) + "-> q" + std::to_string(t.to);
}

std::string describe(const TransitionSystem& sys, const CycleVerdict& c) {
  std::string out;
  for (std::size_t i = 0; i < c.cycle.size(); ++i)
    out += "q" + std::to_string(c.cycle[i]) + " -" + letter_name(sys, c.letters[i]) + "-> ";
  return out + "q" + std::to_string(c.cycle.front());
}

std::string describe_order(const OrderWitness& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) out += (i ? " < q" : "q") + std::to_string(order[i]);
  return out;
}

Verdict yes_no(bool b) { return b ? Verdict::yes : Verdict::no; }

struct OrderOutcome {
  Verdict verdict;
  std::string witness;
};

OrderOutcome order_search(const TransitionSystem& sys) {
  try {
    auto order = find_total_order(sys);
    if (order) return {Verdict::yes, "order " + describe_order(*order)};
    return {Verdict::no, "exhaustive search found no monotone order"};
  } catch (const CapError& e) {
    return {Verdict::unknown, e.what()};
  }
}

}  // namespace

CircumfixVerdict is_circumfix_free(const Dfa& dfa) { return circumfix_from_bia(minimal_bia_of(dfa)); }

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "finite",        "co-finite",           "definite",          "star-free",
      "p-regular",     "piecewise-testable",  "R-trivial",         "commutative",
      "strictly-ordered", "strictly-bi-ordered", "ordered",        "bi-ordered",
      "prefix-free",   "suffix-free",         "circumfix-free",    "minimal-DFA-non-returning",
      "minimal-DBiA-non-returning"};
  return names;
}

const FamilyEntry& ClassificationReport::at(std::string_view family) const {
  for (const auto& e : entries)
    if (e.family == family) return e;
  throw PreconditionError("unknown family " + std::string(family));
}

ClassificationReport classify(const Dfa& input) {
  const Dfa dfa = minimize_dfa(input);
  const Dfa reversed = reverse_dfa(dfa);
  const Bia bia = minimize_bia(cross_product(dfa, reversed).bia);
  const TransitionSystem dsys(dfa), rsys(reversed), bsys(bia);

  ClassificationReport r;
  r.alphabet = dfa.alphabet();
  r.dfa_states = dfa.num_states();
  r.reversed_dfa_states = reversed.num_states();
  r.bia_states = bia.num_states();
  auto add = [&](std::string family, Verdict v, std::string method, std::string witness = {}, bool cond = false) {
    r.entries.push_back({std::move(family), v, cond, std::move(method), std::move(witness)});
  };

  Finiteness fin = finiteness(dfa);
  bool finite = fin.kind == FinitenessKind::finite;
  bool cofinite = fin.kind == FinitenessKind::cofinite;
  add("finite", yes_no(finite), "minimal DFA has no cycle through a live state",
      finite ? "longest word length " + std::to_string(fin.longest_accepted.value_or(0)) : "");
  add("co-finite", yes_no(cofinite), "complement of minimal DFA has no cycle through a live state",
      cofinite ? "longest rejected length " + std::to_string(fin.longest_rejected.value_or(0)) : "");

  auto definite = is_definite(dfa);
  add("definite", yes_no(definite.holds), "minimal DFA strongly permutation-free",
      definite.holds ? "k=" + std::to_string(*definite.k) : describe(*definite.evidence));

  auto star_free = is_star_free(dfa);
  add("star-free", yes_no(star_free.holds), "minimal DFA permutation-free",
      star_free.holds ? "" : describe(*star_free.evidence));

  auto p_regular = is_p_regular(dfa);
  std::string p_witness;
  if (!p_regular.holds) {
    const auto& c = *p_regular.collision;
    p_witness = "q" + std::to_string(c.p) + " and q" + std::to_string(c.q) + " both go to q" +
                std::to_string(c.target) + " on " + letter_name(dsys, c.letter);
  }
  add("p-regular", yes_no(p_regular.holds), "minimal DFA is a permutation automaton", p_witness);

  auto po_bia = is_partially_ordered(bsys);
  add("piecewise-testable", yes_no(po_bia.holds), "minimal biautomaton partially ordered",
      po_bia.holds ? "" : describe(bsys, po_bia), true);
  auto po_dfa = is_partially_ordered(dsys);
  add("R-trivial", yes_no(po_dfa.holds), "minimal DFA partially ordered", po_dfa.holds ? "" : describe(dsys, po_dfa),
      true);

  auto comm = is_commutative(dfa);
  auto comm_bia = is_commutative(bia);
  std::string comm_witness;
  if (!comm.holds) {
    const auto& v = *comm.violation;
    comm_witness = "from q" + std::to_string(v.state) + ": " + dfa.alphabet()[v.a] + dfa.alphabet()[v.b] + " and " +
                   dfa.alphabet()[v.b] + dfa.alphabet()[v.a] + " differ; ";
  }
  comm_witness += std::string("biautomaton fwd=bwd: ") + (comm_bia.holds ? "yes" : "no");
  add("commutative", yes_no(comm.holds), "letter maps of minimal DFA commute", comm_witness);

  auto strict_ordered = order_search(dsys);
  add("strictly-ordered", strict_ordered.verdict, "total order search on minimal DFA", strict_ordered.witness);
  auto strict_bi = order_search(bsys);
  add("strictly-bi-ordered", strict_bi.verdict, "total order search on minimal biautomaton", strict_bi.witness);

  // The forward part of an ordered biautomaton is an ordered DFA.
  if (strict_ordered.verdict == Verdict::yes)
    add("ordered", Verdict::yes, "strictly ordered");
  else if (strict_bi.verdict == Verdict::yes || finite || cofinite)
    add("ordered", Verdict::yes, "bi-ordered");
  else if (!star_free.holds)
    add("ordered", Verdict::no, "not star-free");
  else
    add("ordered", Verdict::unknown, "no decision procedure");
  if (strict_bi.verdict == Verdict::yes)
    add("bi-ordered", Verdict::yes, "strictly bi-ordered");
  else if (finite || cofinite)
    add("bi-ordered", Verdict::yes, "finite or co-finite");
  else if (!star_free.holds)
    add("bi-ordered", Verdict::no, "not star-free");
  else
    add("bi-ordered", Verdict::unknown, "no decision procedure");

  auto prefix = is_non_exiting(dsys);
  add("prefix-free", yes_no(prefix.holds), "minimal DFA non-exiting",
      prefix.holds ? "" : "exiting " + describe(dsys, *prefix.offending));
  auto suffix = is_non_exiting(rsys);
  add("suffix-free", yes_no(suffix.holds), "minimal DFA of reversal non-exiting",
      suffix.holds ? "" : "exiting " + describe(rsys, *suffix.offending));
  auto circumfix = circumfix_from_bia(bia);
  add("circumfix-free", yes_no(circumfix.holds), "minimal biautomaton non-exiting",
      circumfix.holds ? "" : "pair " + show_word(circumfix.pair->longer) + " " + show_word(circumfix.pair->shorter));

  auto dfa_ret = is_non_returning(dsys);
  add("minimal-DFA-non-returning", yes_no(dfa_ret.holds), "no transition into the initial state",
      dfa_ret.holds ? "" : describe(dsys, *dfa_ret.offending));
  auto bia_ret = is_non_returning(bsys);
  add("minimal-DBiA-non-returning", yes_no(bia_ret.holds), "no transition into the initial state",
      bia_ret.holds ? "" : describe(bsys, *bia_ret.offending));
  return r;
}

std::string render_table(const ClassificationReport& report) {
  std::size_t w_family = 6, w_verdict = 7, w_method = 6;
  auto verdict_text = [](const FamilyEntry& e) {
    return std::string(verdict_name(e.verdict)) + (e.conditional ? " (cond.)" : "");
  };
  for (const auto& e : report.entries) {
    w_family = std::max(w_family, e.family.size());
    w_verdict = std::max(w_verdict, verdict_text(e).size());
    w_method = std::max(w_method, e.method.size());
  }
  std::ostringstream out;
  out << "alphabet: " << report.alphabet.symbols() << "\n";
  out << "states: dfa " << report.dfa_states << ", reversed dfa " << report.reversed_dfa_states << ", biautomaton "
      << report.bia_states << "\n";
  auto row = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    std::string line = a + std::string(w_family - a.size() + 2, ' ') + b + std::string(w_verdict - b.size() + 2, ' ') +
                       c + std::string(w_method - c.size() + 2, ' ') + d;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  row("family", "verdict", "method", "witness");
  for (const auto& e : report.entries) row(e.family, verdict_text(e), e.method, e.witness);
  return out.str();
}

std::string to_json(const ClassificationReport& report) {
  nlohmann::json families = nlohmann::json::array();
  for (const auto& e : report.entries)
    families.push_back({{"family", e.family},
                        {"verdict", verdict_name(e.verdict)},
                        {"conditional", e.conditional},
                        {"method", e.method},
                        {"witness", e.witness}});
  nlohmann::json j{{"alphabet", report.alphabet.symbols()},
                   {"states",
                    {{"dfa", report.dfa_states},
                     {"reversed_dfa", report.reversed_dfa_states},
                     {"biautomaton", report.bia_states}}},
                   {"families", families}};
  return j.dump(2);
}

}  // namespace biaut
