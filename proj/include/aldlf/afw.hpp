#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "aldlf/formula.hpp"
#include "aldlf/posbool.hpp"
#include "aldlf/trace.hpp"

namespace aldlf {

// A two-way alternating automaton on finite words. Transitions are positive
// Boolean formulas over (state, direction) moves, evaluated on demand per
// (state, letter); the letter space is exponential so delta is a function,
// not a table. Finite branches accept at true; infinite branches accept when
// an accepting state recurs forever.
struct Afw {
  std::vector<std::string> state_names;
  // For compiled automata, state i is the formula state_formulas[i];
  // empty for hand-built automata.
  std::vector<FormulaPtr> state_formulas;
  std::vector<std::string> atoms;  // sorted alphabet basis
  int start = 0;
  std::vector<bool> accepting;
  std::function<PosBoolPtr(int state, const Interp& letter)> delta;

  int num_states() const { return static_cast<int>(state_names.size()); }
  bool is_final(int q) const { return accepting[q]; }
};

// Letters agree on delta whenever they agree on the automaton's atoms, so
// caches key on the restriction of the interpretation to `atoms`.
std::uint64_t letter_key(const Afw& a, const Interp& letter);

// Per-automaton evaluation cache for delta and its minimal models. Local to
// each algorithm run; Afw itself stays immutable.
//
// Moves that would leave the word cannot be taken: there is no letter to
// read there. A halted accepting state is vacuously satisfied while a halted
// non-accepting state has failed, so at the word boundaries the
// corresponding move atoms resolve to constants before models are computed.
class DeltaCache {
public:
  explicit DeltaCache(const Afw& a) : afw_(a) {}

  const PosBoolPtr& formula(int state, const Interp& letter,
                            bool at_first = false, bool at_last = false);
  const std::vector<MoveSet>& models(int state, const Interp& letter,
                                     bool at_first = false,
                                     bool at_last = false);
  bool is_true(int state, const Interp& letter, bool at_first = false,
               bool at_last = false);
  bool is_false(int state, const Interp& letter, bool at_first = false,
                bool at_last = false);

  // States some minimal model somewhere moves left into. Only these can be
  // the landing state of a return from the right, so speculative scheduling
  // ranges over them. Empty for future-only automata.
  const std::vector<int>& past_move_targets();

private:
  using Key = std::tuple<int, std::uint64_t, bool, bool>;
  const Afw& afw_;
  std::map<Key, PosBoolPtr> delta_;
  std::map<Key, std::vector<MoveSet>> models_;
  bool past_targets_ready_ = false;
  std::vector<int> past_targets_;
};

// The formula-to-automaton construction. Requires negation normal form.
// States are the Fischer-Ladner closure, the start state is the formula
// itself, and the accepting states are exactly the box-form states.
Afw compile_formula(const FormulaPtr& f);

// Interprets every subset of `atoms` in ascending bitmask order.
std::vector<Interp> all_letters(const std::vector<std::string>& atoms);

}  // namespace aldlf
