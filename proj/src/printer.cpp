#include "aldlf/printer.hpp"

#include <cctype>
#include <functional>

namespace aldlf {

std::string AutomatonNamer::name_for(const AutomatonPtr& a) {
  for (const auto& [name, known] : named_)
    if (equal(known, a)) return name;
  std::string name = "a" + std::to_string(named_.size());
  named_.emplace_back(name, a);
  return name;
}

namespace {

// Precedence: | (1) < & (2) < unary (3).
void print_formula_rec(const FormulaPtr& f, int parent_prec,
                       AutomatonNamer& namer, std::string& out) {
  switch (f->kind()) {
    case Formula::Kind::Prop:
      out += prop_to_string(f->prop());
      return;
    case Formula::Kind::Not:
      out += '!';
      print_formula_rec(f->lhs(), 3, namer, out);
      return;
    case Formula::Kind::And: {
      bool parens = parent_prec > 2;
      if (parens) out += '(';
      print_formula_rec(f->lhs(), 2, namer, out);
      out += " & ";
      print_formula_rec(f->rhs(), 3, namer, out);
      if (parens) out += ')';
      return;
    }
    case Formula::Kind::Or: {
      bool parens = parent_prec > 1;
      if (parens) out += '(';
      print_formula_rec(f->lhs(), 1, namer, out);
      out += " | ";
      print_formula_rec(f->rhs(), 2, namer, out);
      if (parens) out += ')';
      return;
    }
    case Formula::Kind::Diamond:
    case Formula::Kind::Box: {
      bool diamond = f->kind() == Formula::Kind::Diamond;
      out += diamond ? '<' : '[';
      out += '@';
      out += namer.name_for(f->automaton());
      out += diamond ? '>' : ']';
      out += ' ';
      print_formula_rec(f->lhs(), 3, namer, out);
      return;
    }
  }
}

// Compound propositional payloads round-trip only when parenthesized, since
// a bare `p & q` label would parse as a formula-level conjunction... they
// appear inside guards only, where prop syntax is native. Tests re-enter the
// formula grammar.
std::string quoted_if_needed(const std::string& s) {
  bool simple = !s.empty();
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      simple = false;
  if (simple) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string formula_to_string(const FormulaPtr& f, AutomatonNamer& namer) {
  std::string out;
  print_formula_rec(f, 0, namer, out);
  return out;
}

namespace {

void nested_automata(const FormulaPtr& f, std::vector<AutomatonPtr>& out) {
  switch (f->kind()) {
    case Formula::Kind::Prop:
      return;
    case Formula::Kind::Not:
      nested_automata(f->lhs(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      nested_automata(f->lhs(), out);
      nested_automata(f->rhs(), out);
      return;
    case Formula::Kind::Diamond:
    case Formula::Kind::Box:
      out.push_back(f->automaton());
      for (const auto& t : f->automaton()->transitions())
        if (t.label.kind() == TransitionLabel::Kind::Test)
          nested_automata(t.label.test_formula(), out);
      nested_automata(f->lhs(), out);
      return;
  }
}

std::string automaton_block(const std::string& name, const AutomatonPtr& a,
                            AutomatonNamer& namer) {
  std::string b;
  b += "automaton " + name + " {\n";
  b += "  states:";
  for (const auto& s : a->state_names()) b += " " + s;
  b += "\n";
  b += "  start: " + a->state_names()[a->start()] + "\n";
  b += "  accepting:";
  for (int g : a->accepting()) b += " " + a->state_names()[g];
  b += "\n";
  b += "  transitions:\n";
  for (const auto& t : a->transitions()) {
    std::string kind, payload;
    switch (t.label.kind()) {
      case TransitionLabel::Kind::Future:
        kind = "future";
        payload = prop_to_string(t.label.guard());
        break;
      case TransitionLabel::Kind::Past:
        kind = "past";
        payload = prop_to_string(t.label.guard());
        break;
      case TransitionLabel::Kind::Test:
        kind = "test";
        payload = formula_to_string(t.label.test_formula(), namer);
        break;
    }
    b += "    " + a->state_names()[t.from] + " " + kind + " " +
         quoted_if_needed(payload) + " " + a->state_names()[t.to] + "\n";
  }
  b += "}\n";
  return b;
}

}  // namespace

std::string defs_to_string(AutomatonNamer& namer) {
  // References inside tests must resolve sequentially, so emit an
  // automaton's dependencies before the automaton itself. Automata are
  // finite values, so the dependency relation is acyclic.
  std::string out;
  std::vector<std::string> done;

  std::function<void(const AutomatonPtr&)> emit =
      [&](const AutomatonPtr& a) {
        std::string name = namer.name_for(a);
        for (const auto& d : done)
          if (d == name) return;
        done.push_back(name);
        for (const auto& t : a->transitions()) {
          if (t.label.kind() != TransitionLabel::Kind::Test) continue;
          std::vector<AutomatonPtr> deps;
          nested_automata(t.label.test_formula(), deps);
          for (const auto& dep : deps) emit(dep);
        }
        out += automaton_block(name, a, namer);
      };

  // named() can grow while emitting; index-walk until stable.
  for (std::size_t i = 0; i < namer.named().size(); ++i) {
    AutomatonPtr a = namer.named()[i].second;
    emit(a);
  }
  return out;
}

PrintedFormula print_formula(const FormulaPtr& f) {
  AutomatonNamer namer;
  PrintedFormula out;
  out.text = formula_to_string(f, namer);
  if (!namer.named().empty()) out.defs_text = defs_to_string(namer);
  return out;
}

}  // namespace aldlf
