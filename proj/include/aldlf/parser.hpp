#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "aldlf/formula.hpp"
#include "aldlf/ltlf.hpp"

namespace aldlf {

class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

// Named path automata available to `@name` references, in definition order.
struct AutomatonDefs {
  std::vector<std::pair<std::string, AutomatonPtr>> entries;

  const AutomatonPtr* find(const std::string& name) const;
  void add(std::string name, AutomatonPtr a);
};

// Formula grammar (precedence low to high: |, &, unary):
//   phi  ::= "true" | "false" | ident | "!" phi | phi "&" phi | phi "|" phi
//          | "<" path ">" phi | "[" path "]" phi | "(" phi ")"
//   path ::= "@" ident | rex
//   rex  ::= prop | "back(" prop ")" | "{" phi "}?" | rex ";" rex
//          | rex "+" rex | rex "*" | "eps" | "(" rex ")"
FormulaPtr parse_formula(const std::string& text,
                         const AutomatonDefs& defs = {});

// Definitions document: a sequence of
//   automaton NAME {
//     states: s0 s1 ...
//     start: s0
//     accepting: s1 ...
//     transitions:
//       s0 future p s1
//       s0 test "p & q" s1
//   }
// Transition formulas with spaces are double-quoted. Tests may reference
// previously defined automata with @name.
AutomatonDefs parse_defs(const std::string& text);

// LTL_f grammar: atoms, !, &, |, X (strong next), U (until, right
// associative, binding between ! and &), parentheses.
LtlfPtr parse_ltlf(const std::string& text);

}  // namespace aldlf
