#include "aldlf/ltlf.hpp"

#include <stdexcept>

namespace aldlf {

Ltlf::Ltlf(Kind kind, std::string name, LtlfPtr lhs, LtlfPtr rhs)
    : kind_(kind), name_(std::move(name)), lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

LtlfPtr Ltlf::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  return LtlfPtr(new Ltlf(Kind::Atom, std::move(name), nullptr, nullptr));
}
LtlfPtr Ltlf::negation(LtlfPtr f) {
  return LtlfPtr(new Ltlf(Kind::Not, "", std::move(f), nullptr));
}
LtlfPtr Ltlf::conj(LtlfPtr a, LtlfPtr b) {
  return LtlfPtr(new Ltlf(Kind::And, "", std::move(a), std::move(b)));
}
LtlfPtr Ltlf::disj(LtlfPtr a, LtlfPtr b) {
  return LtlfPtr(new Ltlf(Kind::Or, "", std::move(a), std::move(b)));
}
LtlfPtr Ltlf::next(LtlfPtr f) {
  return LtlfPtr(new Ltlf(Kind::Next, "", std::move(f), nullptr));
}
LtlfPtr Ltlf::until(LtlfPtr a, LtlfPtr b) {
  return LtlfPtr(new Ltlf(Kind::Until, "", std::move(a), std::move(b)));
}

long ltlf_size(const LtlfPtr& f) {
  switch (f->kind()) {
    case Ltlf::Kind::Atom:
      return 1;
    case Ltlf::Kind::Not:
    case Ltlf::Kind::Next:
      return 1 + ltlf_size(f->lhs());
    case Ltlf::Kind::And:
    case Ltlf::Kind::Or:
    case Ltlf::Kind::Until:
      return 1 + ltlf_size(f->lhs()) + ltlf_size(f->rhs());
  }
  return 1;
}

bool eval_ltlf(const LtlfPtr& f, const Trace& t, int position) {
  if (position < 0 || position >= t.length())
    throw std::out_of_range("position " + std::to_string(position) +
                            " out of range [0," + std::to_string(t.length()) +
                            ")");
  switch (f->kind()) {
    case Ltlf::Kind::Atom:
      return t.at(position).contains(f->name());
    case Ltlf::Kind::Not:
      return !eval_ltlf(f->lhs(), t, position);
    case Ltlf::Kind::And:
      return eval_ltlf(f->lhs(), t, position) &&
             eval_ltlf(f->rhs(), t, position);
    case Ltlf::Kind::Or:
      return eval_ltlf(f->lhs(), t, position) ||
             eval_ltlf(f->rhs(), t, position);
    case Ltlf::Kind::Next:
      return position + 1 < t.length() &&
             eval_ltlf(f->lhs(), t, position + 1);
    case Ltlf::Kind::Until:
      for (int j = position; j < t.length(); ++j) {
        if (eval_ltlf(f->rhs(), t, j)) {
          bool ok = true;
          for (int k = position; k < j && ok; ++k)
            ok = eval_ltlf(f->lhs(), t, k);
          if (ok) return true;
        }
      }
      return false;
  }
  return false;
}

namespace {

// Two states; one advance-on-true edge; only the far state accepts.
// Exactly one walk per position: the step to the next instant.
AutomatonPtr next_automaton() {
  std::vector<Transition> ts;
  ts.push_back(
      Transition{0, TransitionLabel::future(Prop::truth(true)), 1});
  return PathAutomaton::make({"r0", "r1"}, std::move(ts), 0, {1});
}

// Accepting start; a test edge for the left operand, then an advance back.
// Walks stop after k loops, so the automaton reaches exactly the positions
// where the left operand held at every earlier instant.
AutomatonPtr until_automaton(FormulaPtr left) {
  std::vector<Transition> ts;
  ts.push_back(Transition{0, TransitionLabel::test(std::move(left)), 1});
  ts.push_back(
      Transition{1, TransitionLabel::future(Prop::truth(true)), 0});
  return PathAutomaton::make({"r0", "r1"}, std::move(ts), 0, {0});
}

}  // namespace

FormulaPtr ltlf_to_aldlf(const LtlfPtr& f) {
  switch (f->kind()) {
    case Ltlf::Kind::Atom:
      return Formula::atom(f->name());
    case Ltlf::Kind::Not:
      return Formula::negation(ltlf_to_aldlf(f->lhs()));
    case Ltlf::Kind::And:
      return Formula::conj(ltlf_to_aldlf(f->lhs()), ltlf_to_aldlf(f->rhs()));
    case Ltlf::Kind::Or:
      return Formula::disj(ltlf_to_aldlf(f->lhs()), ltlf_to_aldlf(f->rhs()));
    case Ltlf::Kind::Next:
      return Formula::diamond(next_automaton(), ltlf_to_aldlf(f->lhs()));
    case Ltlf::Kind::Until:
      return Formula::diamond(until_automaton(ltlf_to_aldlf(f->lhs())),
                              ltlf_to_aldlf(f->rhs()));
  }
  throw std::logic_error("unreachable");
}

namespace {

void print_ltlf(const LtlfPtr& f, int parent_prec, std::string& out) {
  // Precedence: | (1) < & (2) < U (3) < unary (4).
  switch (f->kind()) {
    case Ltlf::Kind::Atom:
      out += f->name();
      return;
    case Ltlf::Kind::Not:
      out += '!';
      print_ltlf(f->lhs(), 4, out);
      return;
    case Ltlf::Kind::Next:
      out += "X ";
      print_ltlf(f->lhs(), 4, out);
      return;
    case Ltlf::Kind::Until: {
      bool parens = parent_prec > 3;
      if (parens) out += '(';
      print_ltlf(f->lhs(), 4, out);  // U is right associative
      out += " U ";
      print_ltlf(f->rhs(), 3, out);
      if (parens) out += ')';
      return;
    }
    case Ltlf::Kind::And: {
      bool parens = parent_prec > 2;
      if (parens) out += '(';
      print_ltlf(f->lhs(), 2, out);
      out += " & ";
      print_ltlf(f->rhs(), 3, out);
      if (parens) out += ')';
      return;
    }
    case Ltlf::Kind::Or: {
      bool parens = parent_prec > 1;
      if (parens) out += '(';
      print_ltlf(f->lhs(), 1, out);
      out += " | ";
      print_ltlf(f->rhs(), 2, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string ltlf_to_string(const LtlfPtr& f) {
  std::string out;
  print_ltlf(f, 0, out);
  return out;
}

}  // namespace aldlf
