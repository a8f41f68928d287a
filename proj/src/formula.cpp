#include "aldlf/formula.hpp"

#include <algorithm>
#include <deque>

namespace aldlf {

Formula::Formula(Kind kind, PropPtr prop, FormulaPtr lhs, FormulaPtr rhs,
                 AutomatonPtr automaton)
    : kind_(kind), prop_(std::move(prop)), lhs_(std::move(lhs)),
      rhs_(std::move(rhs)), automaton_(std::move(automaton)) {
  std::size_t h = static_cast<std::size_t>(kind_) + 0x2b5;
  if (prop_) h = hash_combine(h, prop_->hash());
  if (lhs_) h = hash_combine(h, lhs_->hash());
  if (rhs_) h = hash_combine(h, rhs_->hash());
  if (automaton_) h = hash_combine(h, automaton_->hash());
  hash_ = h;
}

FormulaPtr Formula::prop(PropPtr p) {
  return FormulaPtr(
      new Formula(Kind::Prop, std::move(p), nullptr, nullptr, nullptr));
}
FormulaPtr Formula::atom(std::string name) {
  return prop(Prop::atom(std::move(name)));
}
FormulaPtr Formula::truth(bool value) { return prop(Prop::truth(value)); }
FormulaPtr Formula::negation(FormulaPtr f) {
  return FormulaPtr(
      new Formula(Kind::Not, nullptr, std::move(f), nullptr, nullptr));
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(
      new Formula(Kind::And, nullptr, std::move(a), std::move(b), nullptr));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(
      new Formula(Kind::Or, nullptr, std::move(a), std::move(b), nullptr));
}
FormulaPtr Formula::diamond(AutomatonPtr a, FormulaPtr f) {
  return FormulaPtr(new Formula(Kind::Diamond, nullptr, std::move(f), nullptr,
                                std::move(a)));
}
FormulaPtr Formula::box(AutomatonPtr a, FormulaPtr f) {
  return FormulaPtr(
      new Formula(Kind::Box, nullptr, std::move(f), nullptr, std::move(a)));
}

int compare(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Formula::Kind::Prop:
      return compare(*a.prop(), *b.prop());
    case Formula::Kind::Not:
      return compare(*a.lhs(), *b.lhs());
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      int c = compare(*a.lhs(), *b.lhs());
      return c != 0 ? c : compare(*a.rhs(), *b.rhs());
    }
    case Formula::Kind::Diamond:
    case Formula::Kind::Box: {
      int c = compare(*a.automaton(), *b.automaton());
      return c != 0 ? c : compare(*a.lhs(), *b.lhs());
    }
  }
  return 0;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash()) return false;
  return compare(*a, *b) == 0;
}

long formula_size(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Prop:
      return prop_size(f->prop());
    case Formula::Kind::Not:
      return 3 + formula_size(f->lhs());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 3 + formula_size(f->lhs()) + formula_size(f->rhs());
    case Formula::Kind::Diamond:
    case Formula::Kind::Box:
      return 4 + f->automaton()->num_states() + formula_size(f->lhs());
  }
  return 1;
}

namespace {

bool automaton_tests_nnf(const PathAutomaton& a) {
  for (const auto& t : a.transitions())
    if (t.label.kind() == TransitionLabel::Kind::Test &&
        !is_nnf(t.label.test_formula()))
      return false;
  return true;
}

// Tests normalized, future/past guards untouched. Returns the input pointer
// when nothing changes so normalization is stable.
AutomatonPtr automaton_nnf(const AutomatonPtr& a) {
  bool changed = false;
  std::vector<Transition> ts = a->transitions();
  for (auto& t : ts) {
    if (t.label.kind() != TransitionLabel::Kind::Test) continue;
    FormulaPtr n = to_nnf(t.label.test_formula());
    if (!equal(n, t.label.test_formula())) {
      t.label = TransitionLabel::test(n);
      changed = true;
    }
  }
  if (!changed) return a;
  return PathAutomaton::make(a->state_names(), std::move(ts), a->start(),
                             a->accepting());
}

}  // namespace

bool is_nnf(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Prop:
      return prop_is_nnf(f->prop());
    case Formula::Kind::Not:
      return f->lhs()->kind() == Formula::Kind::Prop &&
             f->lhs()->prop()->kind() == Prop::Kind::Atom;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_nnf(f->lhs()) && is_nnf(f->rhs());
    case Formula::Kind::Diamond:
    case Formula::Kind::Box:
      return automaton_tests_nnf(*f->automaton()) && is_nnf(f->lhs());
  }
  return false;
}

FormulaPtr to_nnf(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Prop: {
      PropPtr n = prop_nnf(f->prop());
      return n == f->prop() ? f : Formula::prop(n);
    }
    case Formula::Kind::Not:
      return to_nnf_negated(f->lhs());
    case Formula::Kind::And: {
      FormulaPtr l = to_nnf(f->lhs()), r = to_nnf(f->rhs());
      if (l == f->lhs() && r == f->rhs()) return f;
      return Formula::conj(l, r);
    }
    case Formula::Kind::Or: {
      FormulaPtr l = to_nnf(f->lhs()), r = to_nnf(f->rhs());
      if (l == f->lhs() && r == f->rhs()) return f;
      return Formula::disj(l, r);
    }
    case Formula::Kind::Diamond: {
      AutomatonPtr a = automaton_nnf(f->automaton());
      FormulaPtr sub = to_nnf(f->lhs());
      if (a == f->automaton() && sub == f->lhs()) return f;
      return Formula::diamond(a, sub);
    }
    case Formula::Kind::Box: {
      AutomatonPtr a = automaton_nnf(f->automaton());
      FormulaPtr sub = to_nnf(f->lhs());
      if (a == f->automaton() && sub == f->lhs()) return f;
      return Formula::box(a, sub);
    }
  }
  return f;
}

FormulaPtr to_nnf_negated(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::Prop: {
      const PropPtr& p = f->prop();
      if (p->kind() == Prop::Kind::Atom) return Formula::negation(f);
      if (p->kind() == Prop::Kind::True) return Formula::truth(false);
      if (p->kind() == Prop::Kind::False) return Formula::truth(true);
      return Formula::prop(prop_nnf_neg(p));
    }
    case Formula::Kind::Not:
      return to_nnf(f->lhs());
    case Formula::Kind::And:
      return Formula::disj(to_nnf_negated(f->lhs()),
                           to_nnf_negated(f->rhs()));
    case Formula::Kind::Or:
      return Formula::conj(to_nnf_negated(f->lhs()),
                           to_nnf_negated(f->rhs()));
    case Formula::Kind::Diamond:
      return Formula::box(automaton_nnf(f->automaton()),
                          to_nnf_negated(f->lhs()));
    case Formula::Kind::Box:
      return Formula::diamond(automaton_nnf(f->automaton()),
                              to_nnf_negated(f->lhs()));
  }
  return f;
}

std::vector<FormulaPtr> fischer_ladner_closure(const FormulaPtr& f) {
  std::vector<FormulaPtr> order;
  FormulaMap<int> seen;
  std::deque<FormulaPtr> work;

  auto add = [&](const FormulaPtr& g) {
    if (seen.emplace(g, static_cast<int>(order.size())).second) {
      order.push_back(g);
      work.push_back(g);
    }
  };

  add(f);
  while (!work.empty()) {
    FormulaPtr g = work.front();
    work.pop_front();
    switch (g->kind()) {
      case Formula::Kind::Prop:
        break;
      case Formula::Kind::Not:
        if (g->lhs()->kind() != Formula::Kind::Not) add(g->lhs());
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        add(g->lhs());
        add(g->rhs());
        break;
      case Formula::Kind::Diamond:
      case Formula::Kind::Box: {
        bool is_box = g->kind() == Formula::Kind::Box;
        add(g->lhs());
        const AutomatonPtr& u = g->automaton();
        for (int r = 0; r < u->num_states(); ++r) {
          AutomatonPtr rerooted = r == u->start() ? u : u->re_rooted(r);
          add(is_box ? Formula::box(rerooted, g->lhs())
                     : Formula::diamond(rerooted, g->lhs()));
        }
        for (const auto& t : u->transitions()) {
          if (t.label.kind() != TransitionLabel::Kind::Test) continue;
          add(t.label.test_formula());
          // Box transitions discharge a test by refuting it, so the
          // refutation must be a state as well.
          if (is_box) add(to_nnf_negated(t.label.test_formula()));
        }
        break;
      }
    }
  }
  return order;
}

std::vector<std::string> formula_atoms(const FormulaPtr& f) {
  std::vector<std::string> out;
  std::deque<FormulaPtr> work{f};
  while (!work.empty()) {
    FormulaPtr g = work.front();
    work.pop_front();
    switch (g->kind()) {
      case Formula::Kind::Prop:
        prop_atoms(g->prop(), out);
        break;
      case Formula::Kind::Not:
        work.push_back(g->lhs());
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        work.push_back(g->lhs());
        work.push_back(g->rhs());
        break;
      case Formula::Kind::Diamond:
      case Formula::Kind::Box:
        work.push_back(g->lhs());
        for (const auto& t : g->automaton()->transitions()) {
          if (t.label.kind() == TransitionLabel::Kind::Test)
            work.push_back(t.label.test_formula());
          else
            prop_atoms(t.label.guard(), out);
        }
        break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace aldlf
