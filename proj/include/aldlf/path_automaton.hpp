#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aldlf/prop.hpp"

namespace aldlf {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// One edge label of a path automaton: a future guard (advance the read
// position), a past guard (retreat), or a test (stay in place while a full
// formula is checked).
class TransitionLabel {
public:
  enum class Kind { Future, Past, Test };

  static TransitionLabel future(PropPtr guard);
  static TransitionLabel past(PropPtr guard);
  static TransitionLabel test(FormulaPtr formula);

  Kind kind() const { return kind_; }
  const PropPtr& guard() const { return guard_; }
  const FormulaPtr& test_formula() const { return test_; }
  std::size_t hash() const { return hash_; }

private:
  TransitionLabel(Kind kind, PropPtr guard, FormulaPtr test);

  Kind kind_;
  PropPtr guard_;    // Future/Past
  FormulaPtr test_;  // Test
  std::size_t hash_;
};

int compare(const TransitionLabel& a, const TransitionLabel& b);

struct Transition {
  int from = 0;
  TransitionLabel label;
  int to = 0;
};

int compare(const Transition& a, const Transition& b);

class PathAutomaton;
using AutomatonPtr = std::shared_ptr<const PathAutomaton>;

// An NFA over future/past/test labels. States are indices into an ordered
// name list; transitions are kept sorted so automata have one canonical
// representation and structural equality is positional.
class PathAutomaton {
public:
  PathAutomaton(std::vector<std::string> state_names,
                std::vector<Transition> transitions, int start,
                std::vector<int> accepting);

  static AutomatonPtr make(std::vector<std::string> state_names,
                           std::vector<Transition> transitions, int start,
                           std::vector<int> accepting);

  int num_states() const { return static_cast<int>(state_names_.size()); }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  int start() const { return start_; }
  const std::vector<int>& accepting() const { return accepting_; }
  bool is_accepting(int state) const;
  std::size_t hash() const { return hash_; }

  // Same automaton with a different start state.
  AutomatonPtr re_rooted(int new_start) const;

  std::optional<int> state_index(const std::string& name) const;

private:
  std::vector<std::string> state_names_;
  std::vector<Transition> transitions_;  // sorted canonical
  int start_;
  std::vector<int> accepting_;  // sorted, unique
  std::size_t hash_;
};

int compare(const PathAutomaton& a, const PathAutomaton& b);
bool equal(const AutomatonPtr& a, const AutomatonPtr& b);

// The automaton size measure: the number of transitions.
long automaton_size(const PathAutomaton& a);

// Structural problems: isolated states, out-of-range start/accepting ids,
// transitions naming unknown states. Reported, never thrown.
std::vector<std::string> validate_automaton(const PathAutomaton& a);
inline bool automaton_is_valid(const PathAutomaton& a) {
  return validate_automaton(a).empty();
}

// One accepting state with a never-passing test self-loop: accepts exactly
// the empty prefix while satisfying the every-state-occurs requirement.
AutomatonPtr trivial_automaton();

}  // namespace aldlf
