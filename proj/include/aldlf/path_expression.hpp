#pragma once

#include <memory>

#include "aldlf/path_automaton.hpp"

namespace aldlf {

class PathExpression;
using PathExprPtr = std::shared_ptr<const PathExpression>;

// Regular path expressions over future/past guards and tests, compiled to
// path automata. Mirrors the surface syntax inside <...> and [...].
class PathExpression {
public:
  enum class Kind { Future, Past, Test, Concat, Union, Star, Epsilon };

  Kind kind() const { return kind_; }
  const PropPtr& guard() const { return guard_; }
  const FormulaPtr& test_formula() const { return test_; }
  const PathExprPtr& lhs() const { return lhs_; }
  const PathExprPtr& rhs() const { return rhs_; }

  static PathExprPtr future(PropPtr guard);
  static PathExprPtr past(PropPtr guard);
  static PathExprPtr test(FormulaPtr f);
  static PathExprPtr concat(PathExprPtr a, PathExprPtr b);
  static PathExprPtr alt(PathExprPtr a, PathExprPtr b);
  static PathExprPtr star(PathExprPtr e);
  static PathExprPtr epsilon();

private:
  PathExpression(Kind kind, PropPtr guard, FormulaPtr test, PathExprPtr lhs,
                 PathExprPtr rhs);

  Kind kind_;
  PropPtr guard_;
  FormulaPtr test_;
  PathExprPtr lhs_, rhs_;
};

// Thompson-style construction with an always-passing test playing the role
// of the epsilon edge: a test that holds everywhere moves state without
// consuming input, which is exactly what epsilon does. One start state, one
// accepting state, structurally recursive, so nullable stars terminate.
AutomatonPtr regex_to_automaton(const PathExprPtr& e);

}  // namespace aldlf
