#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aldlf/afw.hpp"
#include "aldlf/game.hpp"
#include "aldlf/json_io.hpp"
#include "aldlf/oracle.hpp"
#include "aldlf/parser.hpp"
#include "aldlf/printer.hpp"
#include "aldlf/sat.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct Options {
  std::string formula;
  std::string formula_file;
  std::string second_formula;  // equiv
  std::string defs_file;
  std::string trace_file;
  int pos = 0;
  bool ltlf = false;
  std::string format = "text";
  long max_states = 250000;
  int max_len = 64;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

aldlf::AutomatonDefs load_defs(const Options& opt) {
  if (opt.defs_file.empty()) return {};
  return aldlf::parse_defs(read_file(opt.defs_file));
}

std::string formula_text(const Options& opt) {
  if (!opt.formula.empty() && !opt.formula_file.empty())
    throw std::runtime_error("give either --formula or --formula-file");
  if (!opt.formula.empty()) return opt.formula;
  if (!opt.formula_file.empty()) return read_file(opt.formula_file);
  throw std::runtime_error("no formula given (--formula/-f or --formula-file)");
}

aldlf::FormulaPtr load_formula(const std::string& text, const Options& opt,
                               const aldlf::AutomatonDefs& defs) {
  if (opt.ltlf) return aldlf::ltlf_to_aldlf(aldlf::parse_ltlf(text));
  return aldlf::parse_formula(text, defs);
}

aldlf::Trace load_trace(const Options& opt) {
  if (opt.trace_file.empty())
    throw std::runtime_error("no trace given (--trace <file>)");
  return aldlf::parse_trace(read_file(opt.trace_file));
}

aldlf::SearchLimits limits_of(const Options& opt) {
  aldlf::SearchLimits limits;
  limits.max_states = opt.max_states;
  limits.max_len = opt.max_len;
  return limits;
}

int cmd_eval(const Options& opt) {
  aldlf::AutomatonDefs defs = load_defs(opt);
  aldlf::FormulaPtr f = load_formula(formula_text(opt), opt, defs);
  aldlf::Trace t = load_trace(opt);
  if (opt.pos < 0 || opt.pos >= t.length()) {
    std::cerr << "position " << opt.pos << " out of range for a trace of length "
              << t.length() << "\n";
    return kExitUsage;
  }
  bool verdict = aldlf::eval(f, t, opt.pos);
  if (opt.format == "structured") {
    std::cout << "{\n  \"verdict\": " << (verdict ? "true" : "false")
              << ",\n  \"position\": " << opt.pos << "\n}\n";
  } else {
    std::cout << (verdict ? "true" : "false") << "\n";
  }
  return verdict ? kExitTrue : kExitFalse;
}

int cmd_compile(const Options& opt) {
  aldlf::AutomatonDefs defs = load_defs(opt);
  aldlf::FormulaPtr f =
      aldlf::to_nnf(load_formula(formula_text(opt), opt, defs));
  aldlf::Afw a = aldlf::compile_formula(f);
  if (opt.format == "dot")
    std::cout << aldlf::afw_to_dot(a);
  else if (opt.format == "structured")
    std::cout << aldlf::afw_to_json(a) << "\n";
  else {
    std::cout << "states: " << a.num_states() << "\n";
    for (int q = 0; q < a.num_states(); ++q)
      std::cout << "  " << (q == a.start ? "> " : "  ")
                << (a.accepting[q] ? "* " : "  ") << q << ": "
                << a.state_names[q] << "\n";
    std::cout << "(start '>', accepting '*')\n";
  }
  return kExitTrue;
}

int cmd_sat(const Options& opt) {
  aldlf::AutomatonDefs defs = load_defs(opt);
  aldlf::FormulaPtr f = load_formula(formula_text(opt), opt, defs);
  aldlf::SatResult res = aldlf::is_satisfiable(f, limits_of(opt));
  if (!res.satisfiable()) {
    std::cout << "UNSAT\n";
    return kExitFalse;
  }
  // Replay the witness against the direct semantics before printing it.
  if (!aldlf::eval(f, *res.witness, 0)) {
    std::cerr << "internal error: witness failed oracle replay\n";
    return kExitUsage;
  }
  if (opt.format == "structured")
    std::cout << aldlf::trace_to_json(*res.witness) << "\n";
  else
    std::cout << aldlf::format_trace(*res.witness);
  return kExitTrue;
}

int cmd_equiv(const Options& opt) {
  aldlf::AutomatonDefs defs = load_defs(opt);
  aldlf::FormulaPtr f = load_formula(formula_text(opt), opt, defs);
  if (opt.second_formula.empty())
    throw std::runtime_error("equiv needs a second formula (--other)");
  aldlf::FormulaPtr g = load_formula(opt.second_formula, opt, defs);
  aldlf::EquivResult res = aldlf::equivalence(f, g, limits_of(opt));
  if (res.equivalent) {
    std::cout << "equivalent\n";
    return kExitTrue;
  }
  std::cout << "not equivalent; counterexample:\n"
            << aldlf::format_trace(*res.counterexample);
  return kExitFalse;
}

int cmd_closure(const Options& opt) {
  aldlf::AutomatonDefs defs = load_defs(opt);
  aldlf::FormulaPtr f =
      aldlf::to_nnf(load_formula(formula_text(opt), opt, defs));
  std::vector<aldlf::FormulaPtr> closure = aldlf::fischer_ladner_closure(f);
  aldlf::AutomatonNamer namer;
  std::vector<std::string> rendered;
  rendered.reserve(closure.size());
  for (const auto& g : closure)
    rendered.push_back(aldlf::formula_to_string(g, namer));
  if (opt.format == "structured") {
    std::cout << "{\n  \"size\": " << closure.size() << ",\n  \"members\": [\n";
    for (std::size_t i = 0; i < rendered.size(); ++i)
      std::cout << "    \"" << rendered[i] << (i + 1 < rendered.size() ? "\",\n" : "\"\n");
    std::cout << "  ]\n}\n";
  } else {
    for (const auto& r : rendered) std::cout << r << "\n";
  }
  return kExitTrue;
}

int cmd_nnf(const Options& opt) {
  aldlf::AutomatonDefs defs = load_defs(opt);
  aldlf::FormulaPtr f = load_formula(formula_text(opt), opt, defs);
  aldlf::PrintedFormula printed = aldlf::print_formula(aldlf::to_nnf(f));
  std::cout << printed.text << "\n";
  if (!printed.defs_text.empty())
    std::cout << "# definitions\n" << printed.defs_text;
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ALDL_f: evaluation, compilation, satisfiability, equivalence"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_trace) {
    cmd->add_option("--formula,-f", opt.formula, "formula text");
    cmd->add_option("--formula-file", opt.formula_file, "file with the formula");
    cmd->add_option("--defs", opt.defs_file, "automaton definitions file");
    if (needs_trace) cmd->add_option("--trace", opt.trace_file, "trace file");
    cmd->add_flag("--ltlf", opt.ltlf, "parse the LTL_f grammar (X, U)");
    cmd->add_option("--format", opt.format,
                    "output format: text, structured, dot")
        ->check(CLI::IsMember({"text", "structured", "json-like-structured",
                               "dot"}));
    cmd->add_option("--max-states", opt.max_states, "search state limit");
    cmd->add_option("--max-len", opt.max_len, "witness length limit");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula on a trace");
  add_common(eval, true);
  eval->add_option("--pos", opt.pos, "evaluation position (default 0)");

  CLI::App* compile =
      app.add_subcommand("compile", "compile a formula to its 2AFW");
  add_common(compile, false);

  CLI::App* sat = app.add_subcommand("sat", "decide satisfiability");
  add_common(sat, false);

  CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence");
  add_common(equiv, false);
  equiv->add_option("--other", opt.second_formula, "the second formula");

  CLI::App* closure =
      app.add_subcommand("closure", "print the state closure of a formula");
  add_common(closure, false);

  CLI::App* nnf =
      app.add_subcommand("nnf", "print the negation normal form");
  add_common(nnf, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (opt.format == "json-like-structured") opt.format = "structured";

  try {
    if (app.got_subcommand(eval)) return cmd_eval(opt);
    if (app.got_subcommand(compile)) return cmd_compile(opt);
    if (app.got_subcommand(sat)) return cmd_sat(opt);
    if (app.got_subcommand(equiv)) return cmd_equiv(opt);
    if (app.got_subcommand(closure)) return cmd_closure(opt);
    if (app.got_subcommand(nnf)) return cmd_nnf(opt);
  } catch (const aldlf::SearchLimitExceeded& e) {
    std::cerr << "search limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const aldlf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
