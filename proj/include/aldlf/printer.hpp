#pragma once

#include <string>
#include <vector>

#include "aldlf/formula.hpp"

namespace aldlf {

// Renders a formula back into the surface grammar. Path automata cannot be
// spelled inline, so each distinct automaton is emitted as an `@aN`
// reference and `defs_text` carries the matching definitions document;
// parse_formula(text, parse_defs(defs_text)) reproduces the input formula.
struct PrintedFormula {
  std::string text;
  std::string defs_text;  // empty when the formula has no automata
};

PrintedFormula print_formula(const FormulaPtr& f);

// Formula rendering against an existing name assignment; names automata
// a0, a1, ... in first-encounter order (structural duplicates share names).
class AutomatonNamer {
public:
  std::string name_for(const AutomatonPtr& a);
  const std::vector<std::pair<std::string, AutomatonPtr>>& named() const {
    return named_;
  }

private:
  std::vector<std::pair<std::string, AutomatonPtr>> named_;
};

std::string formula_to_string(const FormulaPtr& f, AutomatonNamer& namer);
// May extend the namer with automata nested inside tests; entries are
// emitted dependencies-first so the defs parser can resolve sequentially.
std::string defs_to_string(AutomatonNamer& namer);

}  // namespace aldlf
