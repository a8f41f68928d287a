#pragma once

#include <optional>
#include <stdexcept>

#include "aldlf/nfw.hpp"
#include "aldlf/trace.hpp"

namespace aldlf {

struct SearchLimits {
  long max_states = 250000;  // visited automaton states
  int max_len = 64;          // witness length bound
};

// Thrown when a search hits a configured limit; distinguishable from a
// definite unsatisfiable verdict.
class SearchLimitExceeded : public std::runtime_error {
public:
  explicit SearchLimitExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

struct SatResult {
  std::optional<Trace> witness;  // shortest accepted trace, if satisfiable
  long explored_states = 0;

  bool satisfiable() const { return witness.has_value(); }
};

// Satisfiability by reachability in the guessing word automaton: breadth
// first over its states with letters enumerated over the subsets of the
// formula's atoms, memoized visited set, and parent pointers for witness
// extraction. The formula is normalized internally.
SatResult is_satisfiable(const FormulaPtr& f, const SearchLimits& limits = {});

struct EquivResult {
  bool equivalent = false;
  std::optional<Trace> counterexample;  // the two sides disagree at position 0
};

// f and g are equivalent iff f&!g and !f&g are both unsatisfiable.
EquivResult equivalence(const FormulaPtr& f, const FormulaPtr& g,
                        const SearchLimits& limits = {});

}  // namespace aldlf
