#include "aldlf/afw.hpp"

#include <stdexcept>

#include "aldlf/printer.hpp"

namespace aldlf {

std::uint64_t letter_key(const Afw& a, const Interp& letter) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < a.atoms.size(); ++i)
    if (letter.contains(a.atoms[i])) key |= (std::uint64_t{1} << (i % 64));
  // Beyond 64 atoms keys would collide; the pipeline never tabulates there.
  return key;
}

namespace {

// Resolves move atoms that would step outside the word: the halted state's
// acceptance decides the value.
PosBoolPtr resolve_boundary(const PosBoolPtr& b, bool at_first, bool at_last,
                            const std::vector<bool>& accepting) {
  switch (b->kind()) {
    case PosBool::Kind::True:
    case PosBool::Kind::False:
      return b;
    case PosBool::Kind::Atom: {
      const Move& m = b->move();
      if ((m.dir == 1 && at_last) || (m.dir == -1 && at_first))
        return PosBool::truth(accepting[static_cast<std::size_t>(m.state)]);
      return b;
    }
    case PosBool::Kind::And: {
      PosBoolPtr l = resolve_boundary(b->lhs(), at_first, at_last, accepting);
      PosBoolPtr r = resolve_boundary(b->rhs(), at_first, at_last, accepting);
      if (l == b->lhs() && r == b->rhs()) return b;
      return PosBool::conj(l, r);
    }
    case PosBool::Kind::Or: {
      PosBoolPtr l = resolve_boundary(b->lhs(), at_first, at_last, accepting);
      PosBoolPtr r = resolve_boundary(b->rhs(), at_first, at_last, accepting);
      if (l == b->lhs() && r == b->rhs()) return b;
      return PosBool::disj(l, r);
    }
  }
  return b;
}

}  // namespace

const PosBoolPtr& DeltaCache::formula(int state, const Interp& letter,
                                      bool at_first, bool at_last) {
  Key key{state, letter_key(afw_, letter), at_first, at_last};
  auto it = delta_.find(key);
  if (it == delta_.end()) {
    PosBoolPtr raw = afw_.delta(state, letter);
    if (at_first || at_last)
      raw = resolve_boundary(raw, at_first, at_last, afw_.accepting);
    it = delta_.emplace(key, std::move(raw)).first;
  }
  return it->second;
}

const std::vector<MoveSet>& DeltaCache::models(int state, const Interp& letter,
                                               bool at_first, bool at_last) {
  Key key{state, letter_key(afw_, letter), at_first, at_last};
  auto it = models_.find(key);
  if (it == models_.end())
    it = models_
             .emplace(key,
                      minimal_models(formula(state, letter, at_first, at_last)))
             .first;
  return it->second;
}

bool DeltaCache::is_true(int state, const Interp& letter, bool at_first,
                         bool at_last) {
  return is_always_true(models(state, letter, at_first, at_last));
}

bool DeltaCache::is_false(int state, const Interp& letter, bool at_first,
                          bool at_last) {
  return models(state, letter, at_first, at_last).empty();
}

const std::vector<int>& DeltaCache::past_move_targets() {
  if (past_targets_ready_) return past_targets_;
  std::vector<bool> seen(afw_.num_states(), false);
  if (afw_.atoms.size() <= 12) {
    for (const Interp& letter : all_letters(afw_.atoms))
      for (int q = 0; q < afw_.num_states(); ++q)
        for (const MoveSet& m : models(q, letter))
          for (const Move& mv : m)
            if (mv.dir == -1) seen[mv.state] = true;
  } else {
    // Too many letters to enumerate; assume anything can be a landing state.
    seen.assign(afw_.num_states(), true);
  }
  for (int q = 0; q < afw_.num_states(); ++q)
    if (seen[q]) past_targets_.push_back(q);
  past_targets_ready_ = true;
  return past_targets_;
}

namespace {

// Resolved transition shape of one modal state: edges out of the start state
// of its automaton with all continuation states mapped to closure indices.
struct ModalEdge {
  TransitionLabel::Kind kind = TransitionLabel::Kind::Future;
  PropPtr guard;       // future/past
  int test_state = -1;  // diamond: the test; box: its normalized negation
  int next = -1;        // the re-rooted modality
};

struct StatePlan {
  Formula::Kind kind = Formula::Kind::Prop;
  PropPtr prop;                // Prop payload, or the atom under a negation
  int lhs = -1, rhs = -1;      // And/Or children
  bool start_accepting = false;
  int continuation = -1;       // modal payload
  std::vector<ModalEdge> edges;
};

}  // namespace

Afw compile_formula(const FormulaPtr& f) {
  if (!is_nnf(f))
    throw std::invalid_argument(
        "compile_formula requires negation normal form");

  std::vector<FormulaPtr> states = fischer_ladner_closure(f);
  FormulaMap<int> index;
  for (std::size_t i = 0; i < states.size(); ++i)
    index.emplace(states[i], static_cast<int>(i));

  auto lookup = [&](const FormulaPtr& g) {
    auto it = index.find(g);
    if (it == index.end())
      throw std::logic_error("transition mentions a state outside the closure");
    return it->second;
  };

  auto plans = std::make_shared<std::vector<StatePlan>>();
  plans->reserve(states.size());
  for (const auto& g : states) {
    StatePlan plan;
    plan.kind = g->kind();
    switch (g->kind()) {
      case Formula::Kind::Prop:
        plan.prop = g->prop();
        break;
      case Formula::Kind::Not:
        plan.prop = g->lhs()->prop();
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        plan.lhs = lookup(g->lhs());
        plan.rhs = lookup(g->rhs());
        break;
      case Formula::Kind::Diamond:
      case Formula::Kind::Box: {
        bool is_box = g->kind() == Formula::Kind::Box;
        const AutomatonPtr& u = g->automaton();
        plan.start_accepting = u->is_accepting(u->start());
        plan.continuation = lookup(g->lhs());
        for (const auto& t : u->transitions()) {
          if (t.from != u->start()) continue;
          ModalEdge e;
          e.kind = t.label.kind();
          AutomatonPtr rerooted =
              t.to == u->start() ? u : u->re_rooted(t.to);
          e.next = lookup(is_box ? Formula::box(rerooted, g->lhs())
                                 : Formula::diamond(rerooted, g->lhs()));
          if (t.label.kind() == TransitionLabel::Kind::Test)
            e.test_state =
                lookup(is_box ? to_nnf_negated(t.label.test_formula())
                              : t.label.test_formula());
          else
            e.guard = t.label.guard();
          plan.edges.push_back(std::move(e));
        }
        break;
      }
    }
    plans->push_back(std::move(plan));
  }

  Afw a;
  a.state_formulas = states;
  a.atoms = formula_atoms(f);
  a.start = 0;  // the closure starts with f itself
  a.accepting.resize(states.size(), false);
  a.state_names.reserve(states.size());
  AutomatonNamer namer;  // shared so @aN means the same automaton in every name
  for (std::size_t i = 0; i < states.size(); ++i) {
    a.accepting[i] = states[i]->kind() == Formula::Kind::Box;
    a.state_names.push_back(formula_to_string(states[i], namer));
  }

  a.delta = [plans](int state, const Interp& letter) -> PosBoolPtr {
    const StatePlan& plan = (*plans)[static_cast<std::size_t>(state)];
    switch (plan.kind) {
      case Formula::Kind::Prop:
        return PosBool::truth(eval_prop(plan.prop, letter));
      case Formula::Kind::Not:
        return PosBool::truth(!eval_prop(plan.prop, letter));
      case Formula::Kind::And:
        return PosBool::conj(PosBool::atom(plan.lhs, 0),
                             PosBool::atom(plan.rhs, 0));
      case Formula::Kind::Or:
        return PosBool::disj(PosBool::atom(plan.lhs, 0),
                             PosBool::atom(plan.rhs, 0));
      case Formula::Kind::Diamond: {
        std::vector<PosBoolPtr> parts;
        if (plan.start_accepting)
          parts.push_back(PosBool::atom(plan.continuation, 0));
        for (const auto& e : plan.edges) {
          switch (e.kind) {
            case TransitionLabel::Kind::Future:
              if (eval_prop(e.guard, letter))
                parts.push_back(PosBool::atom(e.next, 1));
              break;
            case TransitionLabel::Kind::Past:
              if (eval_prop(e.guard, letter))
                parts.push_back(PosBool::atom(e.next, -1));
              break;
            case TransitionLabel::Kind::Test:
              parts.push_back(PosBool::conj(PosBool::atom(e.test_state, 0),
                                            PosBool::atom(e.next, 0)));
              break;
          }
        }
        return PosBool::disj_of(parts);
      }
      case Formula::Kind::Box: {
        std::vector<PosBoolPtr> parts;
        if (plan.start_accepting)
          parts.push_back(PosBool::atom(plan.continuation, 0));
        for (const auto& e : plan.edges) {
          switch (e.kind) {
            case TransitionLabel::Kind::Future:
              if (eval_prop(e.guard, letter))
                parts.push_back(PosBool::atom(e.next, 1));
              break;
            case TransitionLabel::Kind::Past:
              if (eval_prop(e.guard, letter))
                parts.push_back(PosBool::atom(e.next, -1));
              break;
            case TransitionLabel::Kind::Test:
              parts.push_back(PosBool::disj(PosBool::atom(e.test_state, 0),
                                            PosBool::atom(e.next, 0)));
              break;
          }
        }
        return PosBool::conj_of(parts);
      }
    }
    return PosBool::truth(false);
  };
  return a;
}

std::vector<Interp> all_letters(const std::vector<std::string>& atoms) {
  std::vector<Interp> letters;
  std::size_t n = atoms.size();
  letters.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::string> present;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) present.push_back(atoms[i]);
    letters.emplace_back(std::move(present));
  }
  return letters;
}

}  // namespace aldlf
