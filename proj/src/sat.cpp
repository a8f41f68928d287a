#include "aldlf/sat.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace aldlf {

SatResult is_satisfiable(const FormulaPtr& f, const SearchLimits& limits) {
  if (limits.max_states <= 0 || limits.max_len <= 0)
    throw std::invalid_argument("search limits must be positive");

  FormulaPtr g = to_nnf(f);
  Afw a = compile_formula(g);
  DeltaCache cache(a);
  std::vector<Interp> letters = all_letters(a.atoms);

  struct Node {
    NfwState state;
    int parent = -1;
    int letter = -1;
    int depth = 0;
  };
  std::vector<Node> arena;
  std::map<NfwState, int> visited;
  std::deque<int> queue;

  arena.push_back({nfw_initial(), -1, -1, 0});
  visited.emplace(arena[0].state, 0);
  queue.push_back(0);

  SatResult result;
  bool truncated = false;
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    const Node node = arena[id];
    if (node.depth >= limits.max_len) {
      truncated = true;
      continue;
    }

    for (std::size_t li = 0; li < letters.size(); ++li) {
      // Reading this letter as the final one uses the end-of-word transition
      // adjustment, so acceptance is probed separately from continuation.
      for (const NfwState& fin :
           nfw_successors(a, node.state, letters[li], true, cache)) {
        if (fin.control != NfwState::Control::AcceptingReady) continue;
        std::vector<Interp> instants;
        for (int cur = id; cur > 0; cur = arena[cur].parent)
          instants.push_back(letters[arena[cur].letter]);
        std::reverse(instants.begin(), instants.end());
        instants.push_back(letters[li]);
        result.witness = Trace(std::move(instants));
        result.explored_states = static_cast<long>(visited.size());
        return result;
      }
      for (NfwState& succ :
           nfw_successors(a, node.state, letters[li], false, cache)) {
        if (visited.count(succ)) continue;
        if (static_cast<long>(visited.size()) >= limits.max_states)
          throw SearchLimitExceeded(
              "satisfiability search exceeded max states (" +
              std::to_string(limits.max_states) + ")");
        arena.push_back(
            {succ, id, static_cast<int>(li), node.depth + 1});
        visited.emplace(std::move(succ),
                        static_cast<int>(arena.size()) - 1);
        queue.push_back(static_cast<int>(arena.size()) - 1);
      }
    }
  }
  if (truncated)
    throw SearchLimitExceeded("satisfiability search exceeded max witness length (" +
                              std::to_string(limits.max_len) + ")");
  result.explored_states = static_cast<long>(visited.size());
  return result;  // exhausted without acceptance: unsatisfiable
}

EquivResult equivalence(const FormulaPtr& f, const FormulaPtr& g,
                        const SearchLimits& limits) {
  SatResult left =
      is_satisfiable(Formula::conj(f, Formula::negation(g)), limits);
  if (left.satisfiable()) return {false, left.witness};
  SatResult right =
      is_satisfiable(Formula::conj(Formula::negation(f), g), limits);
  if (right.satisfiable()) return {false, right.witness};
  return {true, std::nullopt};
}

}  // namespace aldlf
