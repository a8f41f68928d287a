#pragma once

#include <memory>
#include <string>

#include "aldlf/formula.hpp"
#include "aldlf/trace.hpp"

namespace aldlf {

class Ltlf;
using LtlfPtr = std::shared_ptr<const Ltlf>;

// Linear temporal logic on finite traces: atoms, boolean connectives,
// strong next, and until.
class Ltlf {
public:
  enum class Kind { Atom, Not, And, Or, Next, Until };

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const LtlfPtr& lhs() const { return lhs_; }
  const LtlfPtr& rhs() const { return rhs_; }

  static LtlfPtr atom(std::string name);
  static LtlfPtr negation(LtlfPtr f);
  static LtlfPtr conj(LtlfPtr a, LtlfPtr b);
  static LtlfPtr disj(LtlfPtr a, LtlfPtr b);
  static LtlfPtr next(LtlfPtr f);
  static LtlfPtr until(LtlfPtr a, LtlfPtr b);

private:
  Ltlf(Kind kind, std::string name, LtlfPtr lhs, LtlfPtr rhs);

  Kind kind_;
  std::string name_;
  LtlfPtr lhs_, rhs_;
};

long ltlf_size(const LtlfPtr& f);  // node count

// Finite-trace satisfaction. Next is strong: O f fails at the last instant
// (the textbook bound i < |pi| would index one past the end; we require
// i+1 < |pi|).
bool eval_ltlf(const LtlfPtr& f, const Trace& t, int position);

// Linear translation: homomorphic on the boolean part; next becomes a
// diamond over a single advance-on-true edge, until becomes a diamond over
// a test-then-advance loop with an accepting start.
FormulaPtr ltlf_to_aldlf(const LtlfPtr& f);

std::string ltlf_to_string(const LtlfPtr& f);

}  // namespace aldlf
