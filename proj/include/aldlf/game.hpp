#pragma once

#include <vector>

#include "aldlf/afw.hpp"

namespace aldlf {

// The acceptance game between a Protagonist claiming the automaton accepts
// and an Antagonist refuting. Protagonist nodes are configurations
// (state, position) plus an accept sink; from a configuration the
// Protagonist picks a minimal model of delta, the Antagonist picks one move
// from it. Out-of-range moves lose for the Protagonist. Buchi targets are
// the accept sink and configurations in accepting states.
struct GameGraph {
  struct Node {
    bool protagonist = true;
    int state = -1;  // -1 for sinks
    int pos = -1;
    int model = -1;  // choice index for antagonist nodes, -1 otherwise
  };

  static constexpr int kAcceptSink = 0;
  static constexpr int kRejectSink = 1;

  std::vector<Node> nodes;
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;
  std::vector<bool> target;  // Buchi targets
  int start_node = -1;
};

GameGraph build_game(const Afw& a, const Trace& w, int start_pos);

// Exact Protagonist winning region under "reach the accept sink or visit
// targets infinitely often", by the classical attractor fixpoint.
std::vector<bool> solve_buchi_game(const GameGraph& g);

// Whether the automaton accepts w from start_pos, decided through the game.
bool accepts_game(const Afw& a, const Trace& w, int start_pos);
inline bool accepts_game(const Afw& a, const Trace& w) {
  return accepts_game(a, w, 0);
}

}  // namespace aldlf
