#include "biaut/checks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "biaut/error.hpp"
#include "biaut/format.hpp"

namespace biaut {

namespace {

struct PropertyInfo {
  Property property;
  const char* name;
};

constexpr PropertyInfo kProperties[] = {
    {Property::permutation, "permutation"},
    {Property::permutation_free, "permutation-free"},
    {Property::strongly_permutation_free, "strongly-permutation-free"},
    {Property::acyclic, "acyclic"},
    {Property::partially_ordered, "partially-ordered"},
    {Property::ordered, "ordered"},
    {Property::non_exiting, "non-exiting"},
    {Property::non_returning, "non-returning"},
    {Property::commutative, "commutative"},
    {Property::word_cycle, "word-cycle"},
    {Property::graph_cycle, "graph-cycle"},
};

TransitionSystem system_of(const NamedAutomaton& a) {
  if (a.is_bia()) return TransitionSystem(a.bia());
  return TransitionSystem(a.dfa());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string state_list(const NamedAutomaton& a, std::span<const StateId> states) {
  return join_states(states, a.names);
}

std::string letter_list(const TransitionSystem& sys, const std::vector<Letter>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) out += (i ? " " : "") + letter_name(sys, letters[i]);
  return out;
}

std::string transition_text(const NamedAutomaton& a, const TransitionSystem& sys, const TransitionRef& t) {
  return a.names[t.from] + " " + letter_name(sys, t.letter) + " " + a.names[t.to];
}

const Bia& require_bia(const NamedAutomaton& a, Property p) {
  if (!a.is_bia()) throw PreconditionError(std::string(property_name(p)) + " needs a biautomaton");
  return a.bia();
}

void add_evidence(CheckResult& r, const NamedAutomaton& a, const PermutationEvidence& e) {
  r.fields.emplace_back("subset", state_list(a, e.subset));
  r.fields.emplace_back("u", show_word(e.u));
  r.fields.emplace_back("v", show_word(e.v));
  r.fields.emplace_back("mapping", state_list(a, e.mapping));
  r.fields.emplace_back("trivial", yes_no(e.trivial));
}

}  // namespace

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> v;
    for (const auto& info : kProperties) v.push_back(info.property);
    return v;
  }();
  return all;
}

const char* property_name(Property p) {
  for (const auto& info : kProperties)
    if (info.property == p) return info.name;
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (const auto& info : kProperties)
    if (name == info.name) return info.property;
  return std::nullopt;
}

const char* sink_allowance_name(SinkAllowance s) {
  switch (s) {
    case SinkAllowance::non_accepting:
      return "non-accepting";
    case SinkAllowance::accepting:
      return "accepting";
    case SinkAllowance::both:
      return "both";
  }
  return "?";
}

std::optional<SinkAllowance> parse_sink_allowance(std::string_view name) {
  for (auto s : {SinkAllowance::non_accepting, SinkAllowance::accepting, SinkAllowance::both})
    if (name == sink_allowance_name(s)) return s;
  return std::nullopt;
}

CheckResult run_check(Property property, const NamedAutomaton& a, const CheckOptions& options) {
  const TransitionSystem sys = system_of(a);
  CheckResult r{property, true, false, {}};
  switch (property) {
    case Property::permutation: {
      auto v = is_permutation(sys);
      r.holds = v.holds;
      if (!v.holds) {
        r.fields.emplace_back("collision", a.names[v.collision->p] + " " + a.names[v.collision->q]);
        r.fields.emplace_back("letter", letter_name(sys, v.collision->letter));
        r.fields.emplace_back("target", a.names[v.collision->target]);
      }
      break;
    }
    case Property::permutation_free:
    case Property::strongly_permutation_free: {
      auto v = property == Property::permutation_free ? is_permutation_free(sys, options.semigroup_cap)
                                                      : is_strongly_permutation_free(sys, options.semigroup_cap);
      r.holds = v.holds;
      if (!v.holds) add_evidence(r, a, *v.evidence);
      break;
    }
    case Property::acyclic:
    case Property::partially_ordered: {
      if (property == Property::acyclic) r.fields.emplace_back("allowed-sink", sink_allowance_name(options.allowed_sink));
      auto v = property == Property::acyclic ? is_acyclic(sys, options.allowed_sink) : is_partially_ordered(sys);
      r.holds = v.holds;
      if (!v.holds) {
        r.fields.emplace_back("cycle", state_list(a, v.cycle));
        r.fields.emplace_back("letters", letter_list(sys, v.letters));
      }
      break;
    }
    case Property::ordered: {
      auto order = find_total_order(sys);
      r.holds = order.has_value();
      if (order) r.fields.emplace_back("order", join_states(*order, a.names, " < "));
      break;
    }
    case Property::non_exiting:
    case Property::non_returning: {
      bool exiting = property == Property::non_exiting;
      auto v = exiting ? is_non_exiting(sys) : is_non_returning(sys);
      r.holds = v.holds;
      if (!v.holds)
        r.fields.emplace_back(exiting ? "exiting-transition" : "returning-transition",
                              transition_text(a, sys, *v.offending));
      break;
    }
    case Property::commutative: {
      auto v = a.is_bia() ? is_commutative(a.bia()) : is_commutative(a.dfa());
      r.holds = v.holds;
      if (!v.holds) {
        r.fields.emplace_back("state", a.names[v.violation->state]);
        if (a.is_bia())
          r.fields.emplace_back("symbol", std::string(1, sys.alphabet[v.violation->a]));
        else
          r.fields.emplace_back("symbols",
                                std::string{sys.alphabet[v.violation->a], ' ', sys.alphabet[v.violation->b]});
      }
      break;
    }
    case Property::word_cycle:
    case Property::graph_cycle: {
      const Bia& bia = require_bia(a, property);
      if (options.max_word_len < 1 || options.max_word_len > 8)
        throw PreconditionError("max word length must be between 1 and 8");
      if (options.min_cycle_len < 1) throw PreconditionError("min cycle length must be at least 1");
      r.bounded = true;
      r.fields.emplace_back("max-word-len", std::to_string(options.max_word_len));
      r.fields.emplace_back("min-cycle-len", std::to_string(options.min_cycle_len));
      if (property == Property::word_cycle) {
        auto c = find_word_cycle(bia, options.max_word_len, options.min_cycle_len);
        r.holds = c.has_value();
        if (c) {
          r.fields.emplace_back("word", c->word);
          r.fields.emplace_back("cycle", state_list(a, c->cycle));
          std::string splits;
          for (std::size_t i = 0; i < c->splits.size(); ++i) splits += (i ? " " : "") + std::to_string(c->splits[i]);
          r.fields.emplace_back("splits", splits);
        }
      } else {
        auto c = find_graph_cycle(bia, options.max_word_len, options.min_cycle_len);
        r.holds = c.has_value();
        if (c) {
          r.fields.emplace_back("word", c->word);
          r.fields.emplace_back("cycle", state_list(a, c->cycle));
          std::string heads;
          for (std::size_t i = 0; i < c->heads.size(); ++i) {
            if (i) heads += ' ';
            for (Direction d : c->heads[i]) heads += d == Direction::forward ? 'f' : 'b';
          }
          r.fields.emplace_back("heads", heads);
        }
      }
      break;
    }
  }
  return r;
}

std::string render_check(const CheckResult& r) {
  std::string out = std::string(property_name(r.property)) + ": " + yes_no(r.holds);
  if (r.bounded && !r.holds) out += " (none found up to the bound)";
  out += "\n";
  for (const auto& [k, v] : r.fields) out += k + ": " + v + "\n";
  return out;
}

std::string render_witness(const CheckResult& r) {
  std::string out = std::string("property: ") + property_name(r.property) + "\nholds: " + yes_no(r.holds) + "\n";
  for (const auto& [k, v] : r.fields) out += k + ": " + v + "\n";
  return out;
}

std::string to_json(const CheckResult& r) {
  nlohmann::json witness = nlohmann::json::object();
  for (const auto& [k, v] : r.fields) witness[k] = v;
  nlohmann::json j{{"property", property_name(r.property)},
                   {"holds", r.holds},
                   {"bounded", r.bounded},
                   {"witness", witness}};
  return j.dump(2);
}

namespace {

class WitnessReader {
 public:
  WitnessReader(const NamedAutomaton& a, std::string_view text) : sys_(system_of(a)) {
    for (std::size_t i = 0; i < a.names.size(); ++i) index_[a.names[i]] = static_cast<StateId>(i);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) throw Error("malformed witness line: " + line);
        continue;
      }
      fields_[trim(line.substr(0, colon))] = trim(line.substr(colon + 1));
    }
  }

  const TransitionSystem& sys() const { return sys_; }
  bool has(const std::string& key) const { return fields_.contains(key); }

  const std::string& get(const std::string& key) const {
    auto it = fields_.find(key);
    if (it == fields_.end()) throw Error("witness lacks '" + key + "'");
    return it->second;
  }

  std::vector<std::string> tokens(const std::string& key, std::string_view skip = {}) const {
    std::istringstream in(get(key));
    std::vector<std::string> out;
    for (std::string t; in >> t;)
      if (t != skip) out.push_back(t);
    return out;
  }

  StateId state(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown state '" + name + "' in witness");
    return it->second;
  }

  std::vector<StateId> states(const std::string& key, std::string_view skip = {}) const {
    std::vector<StateId> out;
    for (const auto& t : tokens(key, skip)) out.push_back(state(t));
    return out;
  }

  Letter letter(const std::string& text) const {
    for (std::size_t m = 0; m < sys_.letters.size(); ++m)
      if (letter_name(sys_, sys_.letters[m]) == text) return sys_.letters[m];
    throw Error("unknown letter '" + text + "' in witness");
  }

  std::size_t number(const std::string& key) const {
    const std::string& s = get(key);
    std::size_t pos = 0;
    std::size_t v = std::stoul(s, &pos);
    if (pos != s.size()) throw Error("'" + key + "' is not a number");
    return v;
  }

  bool flag(const std::string& key) const {
    const std::string& s = get(key);
    if (s == "yes") return true;
    if (s == "no") return false;
    throw Error("'" + key + "' must be yes or no");
  }

 private:
  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  TransitionSystem sys_;
  std::map<std::string, StateId> index_;
  std::map<std::string, std::string> fields_;
};

// Throws Error describing the first mismatch.
void expect(bool ok, const std::string& message) {
  if (!ok) throw Error(message);
}

void replay_cycle(const WitnessReader& w, bool acyclic, SinkAllowance allowed) {
  const auto& sys = w.sys();
  auto cycle = w.states("cycle");
  auto letters = w.tokens("letters");
  expect(!cycle.empty() && cycle.size() == letters.size(), "cycle and letters differ in length");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    StateId from = cycle[i], to = cycle[(i + 1) % cycle.size()];
    expect(sys.map(w.letter(letters[i]))[from] == to, "cycle edge " + std::to_string(i) + " does not replay");
    for (std::size_t j = 0; j < i; ++j) expect(cycle[j] != from, "cycle repeats a state");
    if (acyclic && sys.is_sink(from)) {
      bool acc = sys.accepting[from];
      bool removed = allowed == SinkAllowance::both || (acc && allowed == SinkAllowance::accepting) ||
                     (!acc && allowed == SinkAllowance::non_accepting);
      expect(!removed, "cycle runs through an allowed sink");
    }
  }
  if (!acyclic) expect(cycle.size() >= 2, "a self-loop does not violate partial order");
}

void replay(const NamedAutomaton& a, const WitnessReader& w, const CheckResult& fresh) {
  const auto& sys = w.sys();
  switch (fresh.property) {
    case Property::permutation:
      if (!fresh.holds) {
        auto pq = w.states("collision");
        expect(pq.size() == 2 && pq[0] != pq[1], "collision needs two distinct states");
        const auto& m = sys.map(w.letter(w.get("letter")));
        StateId target = w.state(w.get("target"));
        expect(m[pq[0]] == target && m[pq[1]] == target, "collision does not replay");
      }
      break;
    case Property::permutation_free:
    case Property::strongly_permutation_free:
      if (!fresh.holds) {
        PermutationEvidence e{w.states("subset"), parse_shown_word(w.get("u")), parse_shown_word(w.get("v")),
                              w.states("mapping"), w.flag("trivial")};
        sys.alphabet.check_word(e.u);
        sys.alphabet.check_word(e.v);
        expect(evidence_replays(sys, e), "evidence does not replay");
        if (fresh.property == Property::permutation_free)
          expect(!e.trivial, "evidence permutation is trivial");
        else
          expect(e.subset.size() >= 2, "evidence subset has fewer than two states");
      }
      break;
    case Property::acyclic:
    case Property::partially_ordered:
      if (!fresh.holds) {
        SinkAllowance allowed = SinkAllowance::non_accepting;
        if (fresh.property == Property::acyclic) allowed = *parse_sink_allowance(w.get("allowed-sink"));
        replay_cycle(w, fresh.property == Property::acyclic, allowed);
      }
      break;
    case Property::ordered:
      if (fresh.holds) expect(certifies_order(sys, w.states("order", "<")), "order is not monotone");
      break;
    case Property::non_exiting:
    case Property::non_returning:
      if (!fresh.holds) {
        bool exiting = fresh.property == Property::non_exiting;
        auto t = w.tokens(exiting ? "exiting-transition" : "returning-transition");
        expect(t.size() == 3, "transition needs: source letter target");
        StateId from = w.state(t[0]), to = w.state(t[2]);
        expect(sys.map(w.letter(t[1]))[from] == to, "transition does not replay");
        if (exiting)
          expect(sys.accepting[from] && (sys.accepting[to] || !sys.is_sink(to)), "transition is not exiting");
        else
          expect(to == sys.initial, "transition does not enter the initial state");
      }
      break;
    case Property::commutative:
      if (!fresh.holds) {
        StateId q = w.state(w.get("state"));
        if (a.is_bia()) {
          auto s = w.get("symbol");
          expect(s.size() == 1, "symbol expected");
          std::size_t x = sys.alphabet.require(s[0]);
          expect(a.bia().fwd(q, x) != a.bia().bwd(q, x), "forward and backward transitions agree");
        } else {
          auto s = w.tokens("symbols");
          expect(s.size() == 2 && s[0].size() == 1 && s[1].size() == 1, "two symbols expected");
          std::size_t x = sys.alphabet.require(s[0][0]), y = sys.alphabet.require(s[1][0]);
          const Dfa& d = a.dfa();
          expect(d.next(d.next(q, x), y) != d.next(d.next(q, y), x), "the symbols commute at this state");
        }
      }
      break;
    case Property::word_cycle:
    case Property::graph_cycle:
      if (fresh.holds) {
        const Bia& bia = a.bia();
        Word word = w.get("word");
        bia.alphabet().check_word(word);
        expect(!word.empty() && word.size() <= w.number("max-word-len"), "word length out of bound");
        auto cycle = w.states("cycle");
        expect(cycle.size() >= w.number("min-cycle-len"), "cycle is shorter than the minimum");
        for (std::size_t i = 0; i < cycle.size(); ++i)
          for (std::size_t j = 0; j < i; ++j) expect(cycle[i] != cycle[j], "cycle repeats a state");
        auto steps = w.tokens(fresh.property == Property::word_cycle ? "splits" : "heads");
        expect(steps.size() == cycle.size(), "one step per cycle edge expected");
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          StateId x = cycle[i];
          if (fresh.property == Property::word_cycle) {
            std::size_t s = std::stoul(steps[i]);
            expect(s <= word.size(), "split out of range");
            x = bia.read(x, std::string_view(word).substr(0, s), std::string_view(word).substr(s));
          } else {
            expect(steps[i].size() == word.size(), "one head per symbol expected");
            for (std::size_t j = 0; j < word.size(); ++j) {
              std::size_t sym = bia.alphabet().require(word[j]);
              expect(steps[i][j] == 'f' || steps[i][j] == 'b', "heads are f or b");
              x = steps[i][j] == 'f' ? bia.fwd(x, sym) : bia.bwd(x, sym);
            }
          }
          expect(x == cycle[(i + 1) % cycle.size()], "cycle step " + std::to_string(i) + " does not replay");
        }
      }
      break;
  }
}

// `check` text and JSON output carry the same fields as a witness; rewrite
// them into witness form.
std::string as_witness_text(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return std::string(text);
  if (text[first] == '{') {
    auto j = nlohmann::json::parse(text.substr(first), nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("property") || !j.contains("holds"))
      throw Error("malformed JSON witness");
    if (!j["property"].is_string() || !j["holds"].is_boolean()) throw Error("malformed JSON witness");
    std::string out = "property: " + j["property"].get<std::string>() + "\nholds: " +
                      (j["holds"].get<bool>() ? "yes" : "no") + "\n";
    if (j.contains("witness")) {
      if (!j["witness"].is_object()) throw Error("malformed JSON witness");
      for (const auto& [k, v] : j["witness"].items()) {
        if (!v.is_string()) throw Error("malformed JSON witness field '" + k + "'");
        out += k + ": " + v.get<std::string>() + "\n";
      }
    }
    return out;
  }
  auto eol = text.find('\n', first);
  std::string_view head = text.substr(first, eol == std::string_view::npos ? std::string_view::npos : eol - first);
  auto colon = head.find(':');
  if (colon == std::string_view::npos || !parse_property(head.substr(0, colon))) return std::string(text);
  std::string_view verdict = head.substr(colon + 1);
  verdict.remove_prefix(std::min(verdict.find_first_not_of(' '), verdict.size()));
  verdict = verdict.substr(0, verdict.find(' '));
  std::string out = "property: " + std::string(head.substr(0, colon)) + "\nholds: " + std::string(verdict) + "\n";
  if (eol != std::string_view::npos) out += text.substr(eol + 1);
  return out;
}

}  // namespace

VerifyResult verify_witness(const NamedAutomaton& a, std::string_view text) {
  try {
    WitnessReader w(a, as_witness_text(text));
    auto property = parse_property(w.get("property"));
    if (!property) return {false, "unknown property '" + w.get("property") + "'"};
    CheckOptions options;
    if (w.has("allowed-sink")) {
      auto s = parse_sink_allowance(w.get("allowed-sink"));
      if (!s) return {false, "unknown sink allowance"};
      options.allowed_sink = *s;
    }
    if (w.has("max-word-len")) options.max_word_len = w.number("max-word-len");
    if (w.has("min-cycle-len")) options.min_cycle_len = w.number("min-cycle-len");
    bool claimed = w.flag("holds");
    CheckResult fresh = run_check(*property, a, options);
    if (fresh.holds != claimed)
      return {false, std::string("witness claims ") + property_name(*property) + " " + (claimed ? "holds" : "fails") +
                         ", but it " + (fresh.holds ? "holds" : "fails")};
    replay(a, w, fresh);
    return {true, std::string("witness for ") + property_name(*property) + " verified", property};
  } catch (const CapError&) {
    throw;
  } catch (const Error& e) {
    return {false, e.what()};
  } catch (const std::invalid_argument& e) {
    return {false, std::string("malformed number in witness: ") + e.what()};
  }
}

}  // namespace biaut
