#include "aldlf/oracle.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace aldlf {

namespace {

void check_position(const Trace& t, int i, const char* what) {
  if (i < 0 || i >= t.length())
    throw std::out_of_range(std::string(what) + " position " +
                            std::to_string(i) + " out of range [0," +
                            std::to_string(t.length()) + ")");
}

// One top-level evaluation: structural recursion over the formula with a
// per-call memo keyed by (node, position). Modal cases run a reachability
// pass over (automaton state, trace position) pairs; test edges recurse into
// the evaluator on strict subformulas, so the recursion is well founded.
class Evaluator {
public:
  explicit Evaluator(const Trace& t) : trace_(t) {}

  bool eval(const FormulaPtr& f, int i) {
    auto key = std::make_pair(f.get(), i);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool v = compute(f, i);
    memo_.emplace(key, v);
    return v;
  }

  // Positions j with a connecting run of `a` from i to j.
  std::vector<bool> reach_accepting(const PathAutomaton& a, int i) {
    int n = trace_.length();
    int states = a.num_states();
    std::vector<bool> visited(static_cast<std::size_t>(states) * n, false);
    std::vector<bool> hit(n, false);
    std::deque<std::pair<int, int>> queue;

    auto push = [&](int r, int k) {
      std::size_t idx = static_cast<std::size_t>(r) * n + k;
      if (r < 0 || r >= states || visited[idx]) return;
      visited[idx] = true;
      queue.emplace_back(r, k);
      if (a.is_accepting(r)) hit[k] = true;
    };

    push(a.start(), i);
    while (!queue.empty()) {
      auto [r, k] = queue.front();
      queue.pop_front();
      for (const auto& t : a.transitions()) {
        if (t.from != r) continue;
        switch (t.label.kind()) {
          case TransitionLabel::Kind::Future:
            if (k + 1 < n && eval_prop(t.label.guard(), trace_.at(k)))
              push(t.to, k + 1);
            break;
          case TransitionLabel::Kind::Past:
            if (k > 0 && eval_prop(t.label.guard(), trace_.at(k)))
              push(t.to, k - 1);
            break;
          case TransitionLabel::Kind::Test:
            if (eval(t.label.test_formula(), k)) push(t.to, k);
            break;
        }
      }
    }
    return hit;
  }

private:
  bool compute(const FormulaPtr& f, int i) {
    switch (f->kind()) {
      case Formula::Kind::Prop:
        return eval_prop(f->prop(), trace_.at(i));
      case Formula::Kind::Not:
        return !eval(f->lhs(), i);
      case Formula::Kind::And:
        return eval(f->lhs(), i) && eval(f->rhs(), i);
      case Formula::Kind::Or:
        return eval(f->lhs(), i) || eval(f->rhs(), i);
      case Formula::Kind::Diamond: {
        std::vector<bool> hit = reach_accepting(*f->automaton(), i);
        for (int j = 0; j < trace_.length(); ++j)
          if (hit[j] && eval(f->lhs(), j)) return true;
        return false;
      }
      case Formula::Kind::Box: {
        std::vector<bool> hit = reach_accepting(*f->automaton(), i);
        for (int j = 0; j < trace_.length(); ++j)
          if (hit[j] && !eval(f->lhs(), j)) return false;
        return true;
      }
    }
    return false;
  }

  const Trace& trace_;
  std::map<std::pair<const Formula*, int>, bool> memo_;
};

}  // namespace

bool eval(const FormulaPtr& f, const Trace& t, int position) {
  check_position(t, position, "evaluation");
  Evaluator ev(t);
  return ev.eval(f, position);
}

bool sat_automaton(const PathAutomaton& a, const Trace& t, int i, int j) {
  check_position(t, i, "source");
  check_position(t, j, "target");
  Evaluator ev(t);
  return ev.reach_accepting(a, i)[j];
}

std::vector<int> sat_positions(const PathAutomaton& a, const Trace& t, int i) {
  check_position(t, i, "source");
  Evaluator ev(t);
  std::vector<bool> hit = ev.reach_accepting(a, i);
  std::vector<int> out;
  for (int j = 0; j < t.length(); ++j)
    if (hit[j]) out.push_back(j);
  return out;
}

std::optional<Walk> find_walk(const PathAutomaton& a, const Trace& t, int i,
                              int j) {
  check_position(t, i, "source");
  check_position(t, j, "target");
  int n = t.length();
  int states = a.num_states();
  if (a.start() < 0 || a.start() >= states) return std::nullopt;

  Evaluator ev(t);
  struct Parent {
    int prev = -1;  // flat (state, pos) index
    int transition = -1;
  };
  std::vector<Parent> parents(static_cast<std::size_t>(states) * n);
  std::vector<bool> visited(parents.size(), false);
  std::deque<std::pair<int, int>> queue;

  auto flat = [&](int r, int k) { return static_cast<std::size_t>(r) * n + k; };
  auto push = [&](int r, int k, int from, int transition) {
    if (visited[flat(r, k)]) return;
    visited[flat(r, k)] = true;
    parents[flat(r, k)] = Parent{from, transition};
    queue.emplace_back(r, k);
  };

  push(a.start(), i, -1, -1);
  int goal = -1;
  while (!queue.empty() && goal < 0) {
    auto [r, k] = queue.front();
    queue.pop_front();
    if (a.is_accepting(r) && k == j) {
      goal = static_cast<int>(flat(r, k));
      break;
    }
    for (std::size_t ti = 0; ti < a.transitions().size(); ++ti) {
      const auto& tr = a.transitions()[ti];
      if (tr.from != r) continue;
      switch (tr.label.kind()) {
        case TransitionLabel::Kind::Future:
          if (k + 1 < n && eval_prop(tr.label.guard(), t.at(k)))
            push(tr.to, k + 1, static_cast<int>(flat(r, k)),
                 static_cast<int>(ti));
          break;
        case TransitionLabel::Kind::Past:
          if (k > 0 && eval_prop(tr.label.guard(), t.at(k)))
            push(tr.to, k - 1, static_cast<int>(flat(r, k)),
                 static_cast<int>(ti));
          break;
        case TransitionLabel::Kind::Test:
          if (ev.eval(tr.label.test_formula(), k))
            push(tr.to, k, static_cast<int>(flat(r, k)),
                 static_cast<int>(ti));
          break;
      }
    }
  }
  if (goal < 0) return std::nullopt;

  Walk w;
  w.start = i;
  w.end = j;
  std::vector<std::pair<int, TransitionLabel>> rev;
  int cur = goal;
  while (parents[cur].prev >= 0) {
    const auto& tr = a.transitions()[parents[cur].transition];
    int prev = parents[cur].prev;
    int prev_pos = prev % n;
    rev.emplace_back(prev_pos, tr.label);
    cur = prev;
  }
  w.steps.assign(rev.rbegin(), rev.rend());
  return w;
}

}  // namespace aldlf
