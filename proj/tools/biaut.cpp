// Command-line front end. Exit codes: 0 success or property holds, 1 property
// fails (check, witness, oracle compare), 2 usage error, 3 resource cap,
// 4 input parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "biaut/checks.hpp"
#include "biaut/classify.hpp"
#include "biaut/construct.hpp"
#include "biaut/document.hpp"
#include "biaut/error.hpp"
#include "biaut/format.hpp"
#include "biaut/oracle.hpp"
#include "biaut/regex.hpp"

namespace {

using namespace biaut;

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kCap = 3, kParse = 4 };

struct UsageError : Error {
  using Error::Error;
};

NamedAutomaton load(const std::string& path) { return to_automaton(load_doc_file(path)); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    save_text_file(out_path, text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Property property_arg(const std::string& name) {
  auto p = parse_property(name);
  if (!p) {
    std::string known;
    for (Property q : all_properties()) known += std::string(known.empty() ? "" : ", ") + property_name(q);
    throw UsageError("unknown property '" + name + "' (known: " + known + ")");
  }
  return *p;
}

struct CheckArgs {
  std::string property;
  std::string file;
  std::size_t max_word_len = 4;
  std::size_t min_cycle_len = 2;
  std::string allow_sink = "non-accepting";
  bool json = false;
  std::string verify;

  CheckOptions options() const {
    CheckOptions o;
    o.max_word_len = max_word_len;
    o.min_cycle_len = min_cycle_len;
    auto s = parse_sink_allowance(allow_sink);
    if (!s) throw UsageError("--allow-sink must be non-accepting, accepting or both");
    o.allowed_sink = *s;
    return o;
  }
};

void add_check_options(CLI::App* cmd, CheckArgs& args) {
  cmd->add_option("property", args.property, "Property name")->required();
  cmd->add_option("file", args.file, "Automaton file")->required();
  cmd->add_option("--max-word-len", args.max_word_len, "Word length bound for cycle searches (1-8)");
  cmd->add_option("--min-cycle-len", args.min_cycle_len, "Shortest cycle reported by cycle searches");
  cmd->add_option("--allow-sink", args.allow_sink, "Sinks ignored by acyclic: non-accepting, accepting, both");
}

int run(int argc, char** argv) {
  CLI::App app{"Deterministic biautomata toolkit"};
  app.require_subcommand(1);

  std::string regex, alphabet, out_path;
  auto* build = app.add_subcommand("build", "Compile a regular expression to its minimal DFA");
  build->add_option("--regex", regex, "Regular expression")->required();
  build->add_option("--alphabet", alphabet, "Alphabet symbols, e.g. ab")->required();
  build->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string in_path;
  auto* min = app.add_subcommand("min", "Minimize a DFA or biautomaton");
  min->add_option("file", in_path, "Automaton file")->required();
  min->add_option("-o,--output", out_path, "Output file (default stdout)");

  bool minimal = false;
  auto* tobia = app.add_subcommand("tobia", "Biautomaton of the language of a DFA");
  tobia->add_option("file", in_path, "DFA file")->required();
  tobia->add_flag("--minimal", minimal, "Produce the minimal biautomaton");
  tobia->add_option("-o,--output", out_path, "Output file (default stdout)");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide a structural property");
  add_check_options(check, check_args);
  check->add_flag("--json", check_args.json, "JSON output");

  CheckArgs witness_args;
  auto* witness = app.add_subcommand("witness", "Print or verify a property witness");
  add_check_options(witness, witness_args);
  witness->add_option("--verify", witness_args.verify, "Witness file to re-validate");

  bool json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Language family report");
  classify_cmd->add_option("file", in_path, "Automaton file");
  classify_cmd->add_option("--regex", regex, "Regular expression instead of a file");
  classify_cmd->add_option("--alphabet", alphabet, "Alphabet for --regex");
  classify_cmd->add_flag("--json", json, "JSON output");

  auto* dot = app.add_subcommand("dot", "Graphviz rendering");
  dot->add_option("file", in_path, "Automaton file")->required();
  dot->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force word enumeration");
  oracle->require_subcommand(1);
  std::string first, second;
  std::size_t max_len = 0;
  auto* compare = oracle->add_subcommand("compare", "Compare two automata on all words up to a length");
  compare->add_option("first", first, "Automaton file")->required();
  compare->add_option("second", second, "Automaton file")->required();
  compare->add_option("--max-len", max_len, "Length bound")->required();
  auto* dump = oracle->add_subcommand("dump", "List the accepted words up to a length");
  dump->add_option("file", in_path, "Automaton file")->required();
  dump->add_option("--max-len", max_len, "Length bound")->required();
  dump->add_option("-o,--output", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (*build) {
    Dfa dfa = compile_regex(regex, Alphabet(alphabet));
    emit(save_doc(to_doc(dfa)), out_path);
    return kOk;
  }
  if (*min) {
    NamedAutomaton a = load(in_path);
    emit(save_doc(a.is_bia() ? to_doc(minimize_bia(a.bia())) : to_doc(minimize_dfa(a.dfa()))), out_path);
    return kOk;
  }
  if (*tobia) {
    NamedAutomaton a = load(in_path);
    if (a.is_bia()) throw UsageError("input is already a biautomaton");
    Bia bia = minimal ? minimal_bia_of(a.dfa()) : cross_product(a.dfa(), reverse_dfa(a.dfa())).bia;
    emit(save_doc(to_doc(bia)), out_path);
    return kOk;
  }
  if (*check) {
    NamedAutomaton a = load(check_args.file);
    CheckResult r = run_check(property_arg(check_args.property), a, check_args.options());
    std::cout << (check_args.json ? to_json(r) + "\n" : render_check(r));
    return r.holds ? kOk : kFails;
  }
  if (*witness) {
    NamedAutomaton a = load(witness_args.file);
    Property p = property_arg(witness_args.property);
    if (!witness_args.verify.empty()) {
      std::string text = read_file(witness_args.verify);
      VerifyResult v = verify_witness(a, text);
      if (v.valid && v.property != p)
        v = {false, std::string("witness is not for ") + property_name(p)};
      (v.valid ? std::cout : std::cerr) << v.message << "\n";
      return v.valid ? kOk : kFails;
    }
    CheckResult r = run_check(p, a, witness_args.options());
    std::cout << render_witness(r);
    return r.holds ? kOk : kFails;
  }
  if (*classify_cmd) {
    Dfa dfa = [&] {
      if (!regex.empty()) {
        if (!in_path.empty()) throw UsageError("give either a file or --regex, not both");
        if (alphabet.empty()) throw UsageError("--regex needs --alphabet");
        return compile_regex(regex, Alphabet(alphabet));
      }
      if (in_path.empty()) throw UsageError("give a file or --regex");
      NamedAutomaton a = load(in_path);
      return a.is_bia() ? extract_fwd(a.bia()) : a.dfa();
    }();
    ClassificationReport report = classify(dfa);
    std::cout << (json ? to_json(report) + "\n" : render_table(report));
    return kOk;
  }
  if (*dot) {
    emit(to_dot(load(in_path)), out_path);
    return kOk;
  }
  if (*compare) {
    auto language = [](const NamedAutomaton& a) { return a.is_bia() ? extract_fwd(a.bia()) : a.dfa(); };
    Dfa d1 = language(load(first)), d2 = language(load(second));
    if (!(d1.alphabet() == d2.alphabet())) throw UsageError("automata have different alphabets");
    auto cmp = tables_equal(enumerate(d1, max_len), enumerate(d2, max_len));
    if (cmp.equal) {
      std::cout << "equal up to length " << max_len << "\n";
      return kOk;
    }
    std::cout << "differ at " << show_word(*cmp.word) << ": accepted by " << (cmp.in_first ? first : second)
              << " only\n";
    return kFails;
  }
  if (*dump) {
    NamedAutomaton a = load(in_path);
    emit(dump_table(a.is_bia() ? enumerate(a.bia(), max_len) : enumerate(a.dfa(), max_len)), out_path);
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const biaut::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const biaut::AlphabetError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const biaut::InvalidBiautomaton& e) {
    std::cerr << "invalid biautomaton: " << e.what() << "\n";
    return kParse;
  } catch (const biaut::CapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const biaut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
