#include "aldlf/path_automaton.hpp"

#include <algorithm>

#include "aldlf/formula.hpp"

namespace aldlf {

TransitionLabel::TransitionLabel(Kind kind, PropPtr guard, FormulaPtr test)
    : kind_(kind), guard_(std::move(guard)), test_(std::move(test)) {
  std::size_t h = static_cast<std::size_t>(kind_) + 0x17;
  if (guard_) h = hash_combine(h, guard_->hash());
  if (test_) h = hash_combine(h, test_->hash());
  hash_ = h;
}

TransitionLabel TransitionLabel::future(PropPtr guard) {
  return TransitionLabel(Kind::Future, std::move(guard), nullptr);
}
TransitionLabel TransitionLabel::past(PropPtr guard) {
  return TransitionLabel(Kind::Past, std::move(guard), nullptr);
}
TransitionLabel TransitionLabel::test(FormulaPtr formula) {
  return TransitionLabel(Kind::Test, nullptr, std::move(formula));
}

int compare(const TransitionLabel& a, const TransitionLabel& b) {
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  if (a.kind() == TransitionLabel::Kind::Test)
    return compare(*a.test_formula(), *b.test_formula());
  return compare(*a.guard(), *b.guard());
}

int compare(const Transition& a, const Transition& b) {
  if (a.from != b.from) return a.from < b.from ? -1 : 1;
  if (a.to != b.to) return a.to < b.to ? -1 : 1;
  return compare(a.label, b.label);
}

PathAutomaton::PathAutomaton(std::vector<std::string> state_names,
                             std::vector<Transition> transitions, int start,
                             std::vector<int> accepting)
    : state_names_(std::move(state_names)),
      transitions_(std::move(transitions)), start_(start),
      accepting_(std::move(accepting)) {
  std::sort(transitions_.begin(), transitions_.end(),
            [](const Transition& a, const Transition& b) {
              return compare(a, b) < 0;
            });
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end(),
                                 [](const Transition& a, const Transition& b) {
                                   return compare(a, b) == 0;
                                 }),
                     transitions_.end());
  std::sort(accepting_.begin(), accepting_.end());
  accepting_.erase(std::unique(accepting_.begin(), accepting_.end()),
                   accepting_.end());

  std::size_t h = 0xa1d1f;
  for (const auto& n : state_names_)
    h = hash_combine(h, std::hash<std::string>{}(n));
  for (const auto& t : transitions_) {
    h = hash_combine(h, static_cast<std::size_t>(t.from) * 31 + t.to);
    h = hash_combine(h, t.label.hash());
  }
  h = hash_combine(h, static_cast<std::size_t>(start_));
  for (int a : accepting_) h = hash_combine(h, static_cast<std::size_t>(a));
  hash_ = h;
}

AutomatonPtr PathAutomaton::make(std::vector<std::string> state_names,
                                 std::vector<Transition> transitions,
                                 int start, std::vector<int> accepting) {
  return std::make_shared<const PathAutomaton>(
      std::move(state_names), std::move(transitions), start,
      std::move(accepting));
}

bool PathAutomaton::is_accepting(int state) const {
  return std::binary_search(accepting_.begin(), accepting_.end(), state);
}

AutomatonPtr PathAutomaton::re_rooted(int new_start) const {
  return make(state_names_, transitions_, new_start, accepting_);
}

std::optional<int> PathAutomaton::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < state_names_.size(); ++i)
    if (state_names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int compare(const PathAutomaton& a, const PathAutomaton& b) {
  if (a.num_states() != b.num_states())
    return a.num_states() < b.num_states() ? -1 : 1;
  if (a.state_names() != b.state_names())
    return a.state_names() < b.state_names() ? -1 : 1;
  if (a.start() != b.start()) return a.start() < b.start() ? -1 : 1;
  if (a.accepting() != b.accepting())
    return a.accepting() < b.accepting() ? -1 : 1;
  if (a.transitions().size() != b.transitions().size())
    return a.transitions().size() < b.transitions().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.transitions().size(); ++i) {
    int c = compare(a.transitions()[i], b.transitions()[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool equal(const AutomatonPtr& a, const AutomatonPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash()) return false;
  return compare(*a, *b) == 0;
}

long automaton_size(const PathAutomaton& a) {
  return static_cast<long>(a.transitions().size());
}

std::vector<std::string> validate_automaton(const PathAutomaton& a) {
  std::vector<std::string> violations;
  int n = a.num_states();
  auto state_label = [&](int s) {
    if (s >= 0 && s < n) return a.state_names()[s];
    return "#" + std::to_string(s);
  };
  if (a.start() < 0 || a.start() >= n)
    violations.push_back("start state " + state_label(a.start()) +
                         " is not a state of the automaton");
  for (int g : a.accepting())
    if (g < 0 || g >= n)
      violations.push_back("accepting state " + state_label(g) +
                           " is not a state of the automaton");
  std::vector<bool> occurs(n, false);
  for (const auto& t : a.transitions()) {
    if (t.from < 0 || t.from >= n)
      violations.push_back("transition source " + state_label(t.from) +
                           " is not a state of the automaton");
    else
      occurs[t.from] = true;
    if (t.to < 0 || t.to >= n)
      violations.push_back("transition target " + state_label(t.to) +
                           " is not a state of the automaton");
    else
      occurs[t.to] = true;
  }
  for (int s = 0; s < n; ++s)
    if (!occurs[s])
      violations.push_back("isolated state " + a.state_names()[s] +
                           " occurs in no transition");
  return violations;
}

AutomatonPtr trivial_automaton() {
  std::vector<Transition> ts;
  ts.push_back(Transition{0, TransitionLabel::test(Formula::truth(false)), 0});
  return PathAutomaton::make({"s0"}, std::move(ts), 0, {0});
}

}  // namespace aldlf
