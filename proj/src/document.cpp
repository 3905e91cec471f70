#include "biaut/document.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "biaut/error.hpp"
#include "biaut/format.hpp"

namespace biaut {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::string key;
  std::size_t key_column;
  std::vector<Token> values;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    std::vector<Token> tokens;
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (tokens.empty()) continue;

    // The key ends at the first colon; "key:value" and "key :" are accepted.
    Line line{number, {}, tokens[0].column, {}};
    std::size_t colon = tokens[0].text.find(':');
    if (colon != std::string::npos) {
      line.key = tokens[0].text.substr(0, colon);
      if (colon + 1 < tokens[0].text.size())
        line.values.push_back({tokens[0].text.substr(colon + 1), tokens[0].column + colon + 1});
      tokens.erase(tokens.begin());
    } else if (tokens.size() > 1 && tokens[1].text.front() == ':') {
      line.key = tokens[0].text;
      if (tokens[1].text.size() > 1) line.values.push_back({tokens[1].text.substr(1), tokens[1].column + 1});
      tokens.erase(tokens.begin(), tokens.begin() + 2);
    } else {
      throw ParseError("expected 'key: values'", number, tokens[0].column);
    }
    line.values.insert(line.values.end(), tokens.begin(), tokens.end());
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

AutomatonDoc load_doc(std::string_view text) {
  std::vector<Line> lines = split_lines(text);
  std::map<std::string, const Line*> header;
  std::vector<const Line*> transitions;
  for (const Line& l : lines) {
    if (l.key == "trans" || l.key == "fwd" || l.key == "bwd") {
      transitions.push_back(&l);
    } else if (l.key == "type" || l.key == "alphabet" || l.key == "states" || l.key == "initial" ||
               l.key == "accepting") {
      if (header.contains(l.key)) throw ParseError("duplicate '" + l.key + "' section", l.number, l.key_column);
      header[l.key] = &l;
    } else {
      throw ParseError("unknown section '" + l.key + "'", l.number, l.key_column);
    }
  }
  auto need = [&](const std::string& key) -> const Line& {
    auto it = header.find(key);
    if (it == header.end()) throw ParseError("missing '" + key + "' section", 0, 0);
    return *it->second;
  };
  auto single = [](const Line& l) -> const Token& {
    if (l.values.size() != 1) throw ParseError("'" + l.key + "' takes exactly one value", l.number, l.key_column);
    return l.values[0];
  };

  AutomatonDoc doc;
  const Line& type = need("type");
  const Token& kind = single(type);
  if (kind.text == "dfa")
    doc.kind = AutomatonKind::dfa;
  else if (kind.text == "bia")
    doc.kind = AutomatonKind::bia;
  else
    throw ParseError("type must be 'dfa' or 'bia'", type.number, kind.column);

  const Line& alpha = need("alphabet");
  std::string symbols;
  for (const Token& t : alpha.values) {
    if (t.text.size() != 1) throw ParseError("symbols are single characters", alpha.number, t.column);
    if (symbols.find(t.text[0]) != std::string::npos)
      throw ParseError("duplicate symbol '" + t.text + "'", alpha.number, t.column);
    symbols += t.text;
  }
  if (symbols.empty()) throw ParseError("alphabet is empty", alpha.number, alpha.key_column);
  doc.alphabet = Alphabet(symbols);
  const std::size_t k = doc.alphabet.size();

  const Line& states = need("states");
  std::unordered_map<std::string, StateId> index;
  for (const Token& t : states.values) {
    if (!index.emplace(t.text, static_cast<StateId>(doc.states.size())).second)
      throw ParseError("duplicate state '" + t.text + "'", states.number, t.column);
    doc.states.push_back(t.text);
  }
  if (doc.states.empty()) throw ParseError("state list is empty", states.number, states.key_column);
  const std::size_t n = doc.states.size();
  auto state = [&](const Line& l, const Token& t) {
    auto it = index.find(t.text);
    if (it == index.end()) throw ParseError("unknown state '" + t.text + "'", l.number, t.column);
    return it->second;
  };

  const Line& initial = need("initial");
  doc.initial = state(initial, single(initial));
  const Line& accepting = need("accepting");
  doc.accepting.assign(n, false);
  for (const Token& t : accepting.values) doc.accepting[state(accepting, t)] = true;

  constexpr StateId kUnset = ~StateId{0};
  doc.forward.assign(n * k, kUnset);
  if (doc.kind == AutomatonKind::bia) doc.backward.assign(n * k, kUnset);
  for (const Line* l : transitions) {
    bool bia_line = l->key != "trans";
    if (bia_line != (doc.kind == AutomatonKind::bia))
      throw ParseError("'" + l->key + "' lines are not allowed in a " + (bia_line ? "dfa" : "bia") + " document",
                       l->number, l->key_column);
    if (l->values.size() != 3)
      throw ParseError("transition needs: source symbol target", l->number, l->key_column);
    StateId from = state(*l, l->values[0]);
    const Token& sym = l->values[1];
    if (sym.text.size() != 1 || !doc.alphabet.contains(sym.text[0]))
      throw ParseError("unknown symbol '" + sym.text + "'", l->number, sym.column);
    StateId to = state(*l, l->values[2]);
    auto& table = l->key == "bwd" ? doc.backward : doc.forward;
    StateId& slot = table[from * k + doc.alphabet.require(sym.text[0])];
    if (slot != kUnset)
      throw ParseError("duplicate " + l->key + " transition for (" + doc.states[from] + ", " + sym.text + ")",
                       l->number, l->key_column);
    slot = to;
  }
  auto check_total = [&](const std::vector<StateId>& table, const char* what) {
    for (StateId q = 0; q < n; ++q)
      for (std::size_t a = 0; a < k; ++a)
        if (table[q * k + a] == kUnset)
          throw ParseError(std::string("missing ") + what + " transition for (" + doc.states[q] + ", " +
                               doc.alphabet[a] + ")",
                           0, 0);
  };
  check_total(doc.forward, doc.kind == AutomatonKind::dfa ? "trans" : "fwd");
  if (doc.kind == AutomatonKind::bia) check_total(doc.backward, "bwd");
  return doc;
}

std::string save_doc(const AutomatonDoc& doc) {
  const std::size_t k = doc.alphabet.size();
  std::ostringstream out;
  out << "type: " << (doc.kind == AutomatonKind::dfa ? "dfa" : "bia") << "\n";
  out << "alphabet:";
  for (char c : doc.alphabet.symbols()) out << ' ' << c;
  out << "\nstates:";
  for (const auto& s : doc.states) out << ' ' << s;
  out << "\ninitial: " << doc.states[doc.initial] << "\naccepting:";
  for (std::size_t q = 0; q < doc.states.size(); ++q)
    if (doc.accepting[q]) out << ' ' << doc.states[q];
  out << "\n";
  auto emit = [&](const std::vector<StateId>& table, const char* key) {
    for (std::size_t q = 0; q < doc.states.size(); ++q)
      for (std::size_t a = 0; a < k; ++a)
        out << key << ": " << doc.states[q] << ' ' << doc.alphabet[a] << ' ' << doc.states[table[q * k + a]] << "\n";
  };
  emit(doc.forward, doc.kind == AutomatonKind::dfa ? "trans" : "fwd");
  if (doc.kind == AutomatonKind::bia) emit(doc.backward, "bwd");
  return out.str();
}

AutomatonDoc load_doc_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_doc(buf.str());
}

void save_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("error writing " + path);
}

NamedAutomaton to_automaton(const AutomatonDoc& doc) {
  if (doc.kind == AutomatonKind::dfa)
    return {Dfa(doc.alphabet, doc.states.size(), doc.initial, doc.accepting, doc.forward), doc.states};
  return {Bia(BiaTables{doc.alphabet, doc.states.size(), doc.initial, doc.accepting, doc.forward, doc.backward}),
          doc.states};
}

AutomatonDoc to_doc(const Dfa& dfa, std::vector<std::string> names) {
  if (names.empty()) names = default_state_names(dfa.num_states());
  return {AutomatonKind::dfa, dfa.alphabet(), std::move(names), dfa.initial(), dfa.accepting(), dfa.table(), {}};
}

AutomatonDoc to_doc(const Bia& bia, std::vector<std::string> names) {
  if (names.empty()) names = default_state_names(bia.num_states());
  const auto& t = bia.tables();
  return {AutomatonKind::bia, bia.alphabet(), std::move(names), bia.initial(), bia.accepting(), t.fwd, t.bwd};
}

AutomatonDoc to_doc(const NamedAutomaton& automaton) {
  if (automaton.is_bia()) return to_doc(automaton.bia(), automaton.names);
  return to_doc(automaton.dfa(), automaton.names);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const NamedAutomaton& automaton) {
  AutomatonDoc doc = to_doc(automaton);
  const std::size_t k = doc.alphabet.size();
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t q = 0; q < doc.states.size(); ++q)
    out << "  " << quoted(doc.states[q]) << " [shape=" << (doc.accepting[q] ? "doublecircle" : "circle") << "];\n";
  out << "  __start -> " << quoted(doc.states[doc.initial]) << ";\n";
  // Parallel edges between the same states are merged into one label.
  auto emit = [&](const std::vector<StateId>& table, const char* style) {
    std::map<std::pair<std::size_t, StateId>, std::string> labels;
    for (std::size_t q = 0; q < doc.states.size(); ++q)
      for (std::size_t a = 0; a < k; ++a) {
        std::string& label = labels[{q, table[q * k + a]}];
        label += (label.empty() ? "" : ",") + std::string(1, doc.alphabet[a]);
      }
    for (const auto& [edge, label] : labels)
      out << "  " << quoted(doc.states[edge.first]) << " -> " << quoted(doc.states[edge.second])
          << " [label=" << quoted(label) << style << "];\n";
  };
  emit(doc.forward, "");
  if (doc.kind == AutomatonKind::bia) emit(doc.backward, ", style=dashed");
  out << "}\n";
  return out.str();
}

}  // namespace biaut
