#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "aldlf/path_automaton.hpp"
#include "aldlf/prop.hpp"

namespace aldlf {

// Temporal formulas: propositional leaves, boolean connectives, and the two
// path-automaton modalities. Immutable trees with precomputed hashes.
class Formula {
public:
  enum class Kind { Prop, Not, And, Or, Diamond, Box };

  Kind kind() const { return kind_; }
  const PropPtr& prop() const { return prop_; }
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }
  const AutomatonPtr& automaton() const { return automaton_; }
  std::size_t hash() const { return hash_; }

  static FormulaPtr prop(PropPtr p);
  static FormulaPtr atom(std::string name);
  static FormulaPtr truth(bool value);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr diamond(AutomatonPtr a, FormulaPtr f);
  static FormulaPtr box(AutomatonPtr a, FormulaPtr f);

private:
  Formula(Kind kind, PropPtr prop, FormulaPtr lhs, FormulaPtr rhs,
          AutomatonPtr automaton);

  Kind kind_;
  PropPtr prop_;
  FormulaPtr lhs_, rhs_;
  AutomatonPtr automaton_;
  std::size_t hash_;
};

int compare(const Formula& a, const Formula& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaPtrHash {
  std::size_t operator()(const FormulaPtr& f) const { return f->hash(); }
};
struct FormulaPtrEq {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return equal(a, b);
  }
};
template <typename V>
using FormulaMap = std::unordered_map<FormulaPtr, V, FormulaPtrHash, FormulaPtrEq>;

// Size measure: atoms and constants count 1, ! adds 3, binary connectives
// add 3, a modality adds 4 plus the automaton's state count. Compound
// propositional leaves are measured by the same recursion.
long formula_size(const FormulaPtr& f);

// True when every negation, including those inside tests, applies to an
// atom. Future/past guards are opaque propositional filters and exempt.
bool is_nnf(const FormulaPtr& f);

// Pushes negations inward: De Morgan, double-negation elimination, and the
// modal dualities !<U>f = [U]!f and ![U]f = <U>!f. Tests inside automata are
// normalized recursively.
FormulaPtr to_nnf(const FormulaPtr& f);
FormulaPtr to_nnf_negated(const FormulaPtr& f);

// Fischer-Ladner closure: the least superset of {f} closed under subformula
// decomposition, re-rooting of modal automata, and test extraction. For
// every test under a box modality the normalized negation of the test is
// included as well, since box transitions discharge tests by refutation.
// Returned in deterministic discovery order; the first element is f.
std::vector<FormulaPtr> fischer_ladner_closure(const FormulaPtr& f);

// Sorted atom names occurring in f (guards and tests included).
std::vector<std::string> formula_atoms(const FormulaPtr& f);

}  // namespace aldlf
