#include "aldlf/game.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace aldlf {

GameGraph build_game(const Afw& a, const Trace& w, int start_pos) {
  if (start_pos < 0 || start_pos >= w.length())
    throw std::out_of_range("game start position " +
                            std::to_string(start_pos) + " out of range [0," +
                            std::to_string(w.length()) + ")");

  GameGraph g;
  auto add_node = [&](GameGraph::Node node) {
    g.nodes.push_back(node);
    g.succ.emplace_back();
    g.pred.emplace_back();
    g.target.push_back(false);
    return static_cast<int>(g.nodes.size()) - 1;
  };
  auto add_edge = [&](int from, int to) {
    g.succ[from].push_back(to);
    g.pred[to].push_back(from);
  };

  int accept = add_node({true, -1, -1, -1});
  int reject = add_node({false, -1, -1, -1});
  add_edge(accept, accept);
  add_edge(reject, reject);
  g.target[accept] = true;

  DeltaCache cache(a);
  std::map<std::pair<int, int>, int> config_ids;  // (state, pos) -> node
  std::deque<int> work;

  auto config_node = [&](int state, int pos) {
    auto it = config_ids.find({state, pos});
    if (it != config_ids.end()) return it->second;
    int id = add_node({true, state, pos, -1});
    g.target[id] = a.is_final(state);
    config_ids.emplace(std::make_pair(state, pos), id);
    work.push_back(id);
    return id;
  };

  g.start_node = config_node(a.start, start_pos);
  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    int state = g.nodes[id].state;
    int pos = g.nodes[id].pos;
    const std::vector<MoveSet>& models =
        cache.models(state, w.at(pos), pos == 0, pos == w.length() - 1);
    if (models.empty()) {
      add_edge(id, reject);
      continue;
    }
    if (is_always_true(models)) {
      add_edge(id, accept);
      continue;
    }
    for (std::size_t k = 0; k < models.size(); ++k) {
      int choice = add_node({false, state, pos, static_cast<int>(k)});
      add_edge(id, choice);
      for (const Move& m : models[k]) {
        int v = pos + m.dir;
        if (v < 0 || v >= w.length())
          add_edge(choice, reject);  // out-of-range move loses
        else
          add_edge(choice, config_node(m.state, v));
      }
    }
  }
  return g;
}

namespace {

// Nodes from which the Protagonist can force reaching `base` (in >= 0 steps).
std::vector<bool> attractor(const GameGraph& g, const std::vector<bool>& base) {
  std::vector<bool> in(g.nodes.size(), false);
  std::vector<int> missing(g.nodes.size(), 0);
  std::deque<int> work;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    missing[v] = static_cast<int>(g.succ[v].size());
    if (base[v]) {
      in[v] = true;
      work.push_back(static_cast<int>(v));
    }
  }
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    for (int u : g.pred[v]) {
      if (in[u]) continue;
      if (g.nodes[u].protagonist) {
        in[u] = true;
        work.push_back(u);
      } else if (--missing[u] == 0) {
        in[u] = true;
        work.push_back(u);
      }
    }
  }
  return in;
}

// Whether the Protagonist can force entering `set` in exactly one step.
bool one_step_into(const GameGraph& g, int v, const std::vector<bool>& set) {
  if (g.nodes[v].protagonist) {
    for (int u : g.succ[v])
      if (set[u]) return true;
    return false;
  }
  for (int u : g.succ[v])
    if (!set[u]) return false;
  return !g.succ[v].empty();
}

}  // namespace

std::vector<bool> solve_buchi_game(const GameGraph& g) {
  std::vector<bool> recur = g.target;
  for (;;) {
    std::vector<bool> attr = attractor(g, recur);
    std::vector<bool> next = recur;
    bool changed = false;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      if (recur[v] && !one_step_into(g, static_cast<int>(v), attr)) {
        next[v] = false;
        changed = true;
      }
    }
    if (!changed) return attractor(g, recur);
    recur = std::move(next);
  }
}

bool accepts_game(const Afw& a, const Trace& w, int start_pos) {
  GameGraph g = build_game(a, w, start_pos);
  std::vector<bool> win = solve_buchi_game(g);
  return win[g.start_node];
}

}  // namespace aldlf
