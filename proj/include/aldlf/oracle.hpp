#pragma once

#include <optional>
#include <vector>

#include "aldlf/formula.hpp"
#include "aldlf/trace.hpp"

namespace aldlf {

// A witness that a path automaton connects two positions of a trace:
// the start position, the labels taken (with the position each was taken
// at), and the final position. Future steps move +1, past steps -1, tests 0.
struct Walk {
  int start = 0;
  std::vector<std::pair<int, TransitionLabel>> steps;
  int end = 0;
};

// Direct recursive satisfaction of a formula at a position of a trace.
// This is the ground truth every automaton construction is checked against.
bool eval(const FormulaPtr& f, const Trace& t, int position);
inline bool eval(const FormulaPtr& f, const Trace& t) { return eval(f, t, 0); }

// Whether the automaton connects position i to position j on t: either
// i == j with an accepting start state, or a finite label sequence per the
// walk rules. Decided by reachability over (state, position) pairs, so
// cyclic automata terminate.
bool sat_automaton(const PathAutomaton& a, const Trace& t, int i, int j);

// All j reachable from i (the set {j : sat_automaton(a,t,i,j)}).
std::vector<int> sat_positions(const PathAutomaton& a, const Trace& t, int i);

// A shortest connecting walk when one exists.
std::optional<Walk> find_walk(const PathAutomaton& a, const Trace& t, int i,
                              int j);

}  // namespace aldlf
