#pragma once

// Hand-built alternating automata shared by the certificate and word
// automaton suites.

#include <map>

#include "aldlf/afw.hpp"

namespace aldlf::testfix {

// Three states over the single-letter alphabet {a}: the start may defer to a
// partner that loops back, or to a state that accepts outright. No accepting
// states, so the only way to win is through the immediate accept.
inline Afw loop_or_accept() {
  Afw a;
  a.state_names = {"q0", "q1", "q2"};
  a.atoms = {"a"};
  a.start = 0;
  a.accepting = {false, false, false};
  a.delta = [](int state, const Interp&) -> PosBoolPtr {
    switch (state) {
      case 0:
        return PosBool::disj(PosBool::atom(1, 0), PosBool::atom(2, 0));
      case 1:
        return PosBool::atom(0, 0);
      default:
        return PosBool::truth(true);
    }
  };
  return a;
}

// The same automaton without the accepting escape: q0 and q1 chase each
// other forever and nothing is accepting.
inline Afw loop_only() {
  Afw a;
  a.state_names = {"q0", "q1"};
  a.atoms = {"a"};
  a.start = 0;
  a.accepting = {false, false};
  a.delta = [](int state, const Interp&) -> PosBoolPtr {
    return state == 0 ? PosBool::atom(1, 0) : PosBool::atom(0, 0);
  };
  return a;
}

// An explicit move table keyed by state; every letter behaves the same.
inline Afw table_afw(std::vector<std::string> names,
                     std::map<int, PosBoolPtr> delta,
                     std::vector<bool> accepting, int start = 0) {
  Afw a;
  a.state_names = std::move(names);
  a.atoms = {"a"};
  a.start = start;
  a.accepting = std::move(accepting);
  auto table = std::make_shared<std::map<int, PosBoolPtr>>(std::move(delta));
  a.delta = [table](int state, const Interp&) -> PosBoolPtr {
    auto it = table->find(state);
    return it == table->end() ? PosBool::truth(false) : it->second;
  };
  return a;
}

inline Trace word_a(int len = 1) {
  std::vector<Interp> instants(static_cast<std::size_t>(len),
                               Interp({"a"}));
  return Trace(std::move(instants));
}

}  // namespace aldlf::testfix
