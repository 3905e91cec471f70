#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biaut/checks.hpp"
#include "biaut/classify.hpp"
#include "biaut/construct.hpp"
#include "biaut/document.hpp"
#include "biaut/error.hpp"
#include "biaut/oracle.hpp"
#include "biaut/regex.hpp"
#include "biaut/structure.hpp"

namespace py = pybind11;
using namespace biaut;

namespace {

NamedAutomaton named(const Dfa& d) { return to_automaton(to_doc(d)); }
NamedAutomaton named(const Bia& b) { return to_automaton(to_doc(b)); }

Property property_arg(const std::string& name) {
  auto p = parse_property(name);
  if (!p) throw PreconditionError("unknown property '" + name + "'");
  return *p;
}

py::dict check_dict(const CheckResult& r) {
  py::dict fields;
  for (const auto& [k, v] : r.fields) fields[py::str(k)] = v;
  py::dict out;
  out["property"] = property_name(r.property);
  out["holds"] = r.holds;
  out["bounded"] = r.bounded;
  out["witness"] = fields;
  return out;
}

CheckResult run(const std::string& property, const NamedAutomaton& a, std::size_t max_word_len,
                std::size_t min_cycle_len, const std::string& allow_sink) {
  CheckOptions o;
  o.max_word_len = max_word_len;
  o.min_cycle_len = min_cycle_len;
  auto s = parse_sink_allowance(allow_sink);
  if (!s) throw PreconditionError("allow_sink must be non-accepting, accepting or both");
  o.allowed_sink = *s;
  return run_check(property_arg(property), a, o);
}

std::vector<std::string> accepted_words(const WordTable& t) { return t.words(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deterministic finite automata and biautomata";

  // Translators run newest first, so the base class goes first.
  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<AlphabetError>(m, "AlphabetError", error.ptr());
  py::register_exception<CapError>(m, "CapError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<InvalidBiautomaton>(m, "InvalidBiautomaton", error.ptr());

  py::class_<Dfa>(m, "Dfa")
      .def_static(
          "from_regex", [](const std::string& regex, const std::string& alphabet) {
            return compile_regex(regex, Alphabet(alphabet));
          },
          py::arg("regex"), py::arg("alphabet"))
      .def_static(
          "loads", [](const std::string& text) {
            NamedAutomaton a = to_automaton(load_doc(text));
            if (a.is_bia()) throw PreconditionError("document describes a biautomaton");
            return a.dfa();
          },
          py::arg("text"))
      .def("dumps", [](const Dfa& d) { return save_doc(to_doc(d)); })
      .def_property_readonly("num_states", &Dfa::num_states)
      .def_property_readonly("alphabet", [](const Dfa& d) { return d.alphabet().symbols(); })
      .def("accepts", [](const Dfa& d, const std::string& w) { return accepts(d, w); }, py::arg("word"))
      .def("minimize", &minimize_dfa)
      .def("reverse", [](const Dfa& d) { return reverse_dfa(d); })
      .def("complement", &complement_dfa)
      .def("words", [](const Dfa& d, std::size_t n) { return accepted_words(enumerate(d, n)); }, py::arg("max_len"))
      .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
      .def("__repr__", [](const Dfa& d) { return "<Dfa with " + std::to_string(d.num_states()) + " states>"; });

  py::class_<Bia>(m, "Bia")
      .def_static(
          "of", [](const Dfa& d, bool minimal) { return minimal ? minimal_bia_of(d) : cross_product(d, reverse_dfa(d)).bia; },
          py::arg("dfa"), py::arg("minimal") = true)
      .def_static(
          "loads", [](const std::string& text) {
            NamedAutomaton a = to_automaton(load_doc(text));
            if (!a.is_bia()) throw PreconditionError("document describes a DFA");
            return a.bia();
          },
          py::arg("text"))
      .def("dumps", [](const Bia& b) { return save_doc(to_doc(b)); })
      .def_property_readonly("num_states", &Bia::num_states)
      .def("accepts", [](const Bia& b, const std::string& w) { return accepts(b, w); }, py::arg("word"))
      .def("read", &Bia::read, py::arg("state"), py::arg("u"), py::arg("v"))
      .def_property_readonly("initial", &Bia::initial)
      .def("minimize", &minimize_bia)
      .def("forward_dfa", &extract_fwd)
      .def("isomorphic", &bia_isomorphic, py::arg("other"))
      .def("words", [](const Bia& b, std::size_t n) { return accepted_words(enumerate(b, n)); }, py::arg("max_len"))
      .def("__eq__", [](const Bia& a, const Bia& b) { return a == b; })
      .def("__repr__", [](const Bia& b) { return "<Bia with " + std::to_string(b.num_states()) + " states>"; });

  m.def("properties", [] {
    std::vector<std::string> names;
    for (Property p : all_properties()) names.emplace_back(property_name(p));
    return names;
  });
  m.def(
      "check",
      [](const std::string& property, const Dfa& d, std::size_t max_word_len, std::size_t min_cycle_len,
         const std::string& allow_sink) {
        return check_dict(run(property, named(d), max_word_len, min_cycle_len, allow_sink));
      },
      py::arg("property"), py::arg("automaton"), py::arg("max_word_len") = 4, py::arg("min_cycle_len") = 2,
      py::arg("allow_sink") = "non-accepting");
  m.def(
      "check",
      [](const std::string& property, const Bia& b, std::size_t max_word_len, std::size_t min_cycle_len,
         const std::string& allow_sink) {
        return check_dict(run(property, named(b), max_word_len, min_cycle_len, allow_sink));
      },
      py::arg("property"), py::arg("automaton"), py::arg("max_word_len") = 4, py::arg("min_cycle_len") = 2,
      py::arg("allow_sink") = "non-accepting");
  m.def(
      "witness",
      [](const std::string& property, const Bia& b, std::size_t max_word_len) {
        return render_witness(run(property, named(b), max_word_len, 2, "non-accepting"));
      },
      py::arg("property"), py::arg("automaton"), py::arg("max_word_len") = 4);
  m.def(
      "witness",
      [](const std::string& property, const Dfa& d, std::size_t max_word_len) {
        return render_witness(run(property, named(d), max_word_len, 2, "non-accepting"));
      },
      py::arg("property"), py::arg("automaton"), py::arg("max_word_len") = 4);
  m.def(
      "verify_witness",
      [](const Dfa& d, const std::string& text) {
        auto v = verify_witness(named(d), text);
        return py::make_tuple(v.valid, v.message);
      },
      py::arg("automaton"), py::arg("witness"));
  m.def(
      "verify_witness",
      [](const Bia& b, const std::string& text) {
        auto v = verify_witness(named(b), text);
        return py::make_tuple(v.valid, v.message);
      },
      py::arg("automaton"), py::arg("witness"));
  m.def("classify_json", [](const Dfa& d) { return to_json(classify(d)); }, py::arg("dfa"));
  m.def("classify_table", [](const Dfa& d) { return render_table(classify(d)); }, py::arg("dfa"));
}
