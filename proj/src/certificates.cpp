#include "aldlf/certificates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aldlf {

std::vector<int> origin_states(const StrategyLetter& letter) {
  std::vector<int> out;
  for (const auto& t : letter) out.push_back(t.from);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool strategy_contains(const StrategyLetter& letter, const StrategyTriple& t) {
  return std::binary_search(letter.begin(), letter.end(), t);
}

bool annotation_contains(const AnnotationLetter& letter,
                         const AnnotationTriple& t) {
  return std::binary_search(letter.begin(), letter.end(), t);
}

namespace {

int final_flag(const Afw& a, int q) { return a.is_final(q) ? 1 : 0; }

using TripleSet = std::set<AnnotationTriple>;

// The same-position cycles forced by gamma, as a joint fixpoint over all
// positions: zero moves, one-step and through-cycle returns in both
// directions, then transitivity at each position.
std::vector<TripleSet> closure_sets(const Afw& a,
                                    const std::vector<StrategyLetter>& gamma) {
  int len = static_cast<int>(gamma.size());
  std::vector<TripleSet> eta(len);

  bool changed = true;
  auto add = [&](int u, AnnotationTriple t) {
    if (eta[u].insert(t).second) changed = true;
  };

  while (changed) {
    changed = false;
    for (int u = 0; u < len; ++u) {
      for (const auto& m : gamma[u]) {
        if (m.dir == 0) {
          add(u, {m.from, final_flag(a, m.to), m.to});
        } else if (m.dir == 1 && u + 1 < len) {
          for (const auto& back : gamma[u + 1])
            if (back.dir == -1 && back.from == m.to)
              add(u, {m.from,
                      std::max(final_flag(a, m.to), final_flag(a, back.to)),
                      back.to});
          for (const auto& cyc : eta[u + 1]) {
            if (cyc.from != m.to) continue;
            for (const auto& back : gamma[u + 1])
              if (back.dir == -1 && back.from == cyc.to)
                add(u, {m.from,
                        std::max({final_flag(a, m.to), cyc.flag,
                                  final_flag(a, back.to)}),
                        back.to});
          }
        } else if (m.dir == -1 && u - 1 >= 0) {
          for (const auto& back : gamma[u - 1])
            if (back.dir == 1 && back.from == m.to)
              add(u, {m.from,
                      std::max(final_flag(a, m.to), final_flag(a, back.to)),
                      back.to});
          for (const auto& cyc : eta[u - 1]) {
            if (cyc.from != m.to) continue;
            for (const auto& back : gamma[u - 1])
              if (back.dir == 1 && back.from == cyc.to)
                add(u, {m.from,
                        std::max({final_flag(a, m.to), cyc.flag,
                                  final_flag(a, back.to)}),
                        back.to});
          }
        }
      }
      // transitivity within the position
      std::vector<AnnotationTriple> snapshot(eta[u].begin(), eta[u].end());
      for (const auto& x : snapshot)
        for (const auto& y : snapshot)
          if (x.to == y.from)
            add(u, {x.from, std::max(x.flag, y.flag), y.to});
    }
  }
  return eta;
}

std::string state_label(const Afw& a, int q) {
  if (q >= 0 && q < a.num_states()) return a.state_names[q];
  return "#" + std::to_string(q);
}

std::string triple_str(const Afw& a, int from, int mid, int to) {
  return "(" + state_label(a, from) + "," + std::to_string(mid) + "," +
         state_label(a, to) + ")";
}

}  // namespace

std::vector<AnnotationLetter> annotation_closure(
    const Afw& a, const std::vector<StrategyLetter>& gamma) {
  std::vector<TripleSet> sets = closure_sets(a, gamma);
  std::vector<AnnotationLetter> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

CertCheck verify_certificate(const Afw& a, const Trace& w,
                             const std::vector<StrategyLetter>& gamma,
                             const std::vector<AnnotationLetter>& eta) {
  int len = w.length();
  if (static_cast<int>(gamma.size()) != len ||
      static_cast<int>(eta.size()) != len)
    throw std::invalid_argument(
        "certificate length does not match the word length");

  DeltaCache cache(a);
  auto fail = [&](const char* condition, std::string detail) {
    return CertCheck{false, condition, std::move(detail)};
  };

  // The start state must be scheduled at position 0, unless the transition
  // function is immediately true there.
  {
    std::vector<int> origins = origin_states(gamma[0]);
    bool scheduled =
        std::binary_search(origins.begin(), origins.end(), a.start);
    if (!scheduled && !cache.is_true(a.start, w.at(0), true, len == 1))
      return fail("initial-state-uncovered",
                  "start state " + state_label(a, a.start) +
                      " is not an origin of the first strategy letter");
  }

  for (const auto& t : gamma[0])
    if (t.dir == -1)
      return fail("left-move-at-start",
                  "strategy letter 0 moves left of the word: " +
                      triple_str(a, t.from, t.dir, t.to));
  for (const auto& t : gamma[len - 1])
    if (t.dir == 1)
      return fail("right-move-at-end",
                  "last strategy letter moves past the word: " +
                      triple_str(a, t.from, t.dir, t.to));

  for (int u = 0; u < len; ++u) {
    for (int q : origin_states(gamma[u])) {
      MoveSet moves;
      for (const auto& t : gamma[u])
        if (t.from == q) moves.push_back(Move{t.to, t.dir});
      std::sort(moves.begin(), moves.end());
      if (!satisfies(moves, *cache.formula(q, w.at(u), u == 0, u == len - 1)))
        return fail("transition-unsatisfied",
                    "moves of " + state_label(a, q) + " at position " +
                        std::to_string(u) +
                        " do not satisfy the transition function");
    }
  }

  // Every move must land on a state that either has moves of its own at the
  // target position or is immediately accepting there; otherwise the play
  // would strand in a configuration the strategy says nothing about.
  for (int u = 0; u < len; ++u) {
    for (const auto& t : gamma[u]) {
      int v = u + t.dir;
      if (v < 0 || v >= len) continue;  // boundary conditions caught above
      std::vector<int> origins = origin_states(gamma[v]);
      if (!std::binary_search(origins.begin(), origins.end(), t.to) &&
          !cache.is_true(t.to, w.at(v), v == 0, v == len - 1))
        return fail("dangling-move-target",
                    triple_str(a, t.from, t.dir, t.to) + " at position " +
                        std::to_string(u) + " lands on an unscheduled state");
    }
  }

  // eta must contain every cycle forced by gamma and itself.
  auto has = [&](int u, const AnnotationTriple& t) {
    return annotation_contains(eta[u], t);
  };
  for (int u = 0; u < len; ++u) {
    for (const auto& m : gamma[u]) {
      if (m.dir == 0) {
        AnnotationTriple need{m.from, final_flag(a, m.to), m.to};
        if (!has(u, need))
          return fail("missing-zero-move-cycle",
                      "position " + std::to_string(u) + " lacks " +
                          triple_str(a, need.from, need.flag, need.to));
      } else if (m.dir == 1 && u + 1 < len) {
        for (const auto& back : gamma[u + 1]) {
          if (back.dir != -1 || back.from != m.to) continue;
          AnnotationTriple need{
              m.from, std::max(final_flag(a, m.to), final_flag(a, back.to)),
              back.to};
          if (!has(u, need))
            return fail("missing-right-return-cycle",
                        "position " + std::to_string(u) + " lacks " +
                            triple_str(a, need.from, need.flag, need.to));
        }
        for (const auto& cyc : eta[u + 1]) {
          if (cyc.from != m.to) continue;
          for (const auto& back : gamma[u + 1]) {
            if (back.dir != -1 || back.from != cyc.to) continue;
            AnnotationTriple need{m.from,
                                  std::max({final_flag(a, m.to), cyc.flag,
                                            final_flag(a, back.to)}),
                                  back.to};
            if (!has(u, need))
              return fail("missing-right-return-cycle",
                          "position " + std::to_string(u) + " lacks " +
                              triple_str(a, need.from, need.flag, need.to) +
                              " (through a cycle one step right)");
          }
        }
      } else if (m.dir == -1 && u - 1 >= 0) {
        for (const auto& back : gamma[u - 1]) {
          if (back.dir != 1 || back.from != m.to) continue;
          AnnotationTriple need{
              m.from, std::max(final_flag(a, m.to), final_flag(a, back.to)),
              back.to};
          if (!has(u, need))
            return fail("missing-left-return-cycle",
                        "position " + std::to_string(u) + " lacks " +
                            triple_str(a, need.from, need.flag, need.to));
        }
        for (const auto& cyc : eta[u - 1]) {
          if (cyc.from != m.to) continue;
          for (const auto& back : gamma[u - 1]) {
            if (back.dir != 1 || back.from != cyc.to) continue;
            AnnotationTriple need{m.from,
                                  std::max({final_flag(a, m.to), cyc.flag,
                                            final_flag(a, back.to)}),
                                  back.to};
            if (!has(u, need))
              return fail("missing-left-return-cycle",
                          "position " + std::to_string(u) + " lacks " +
                              triple_str(a, need.from, need.flag, need.to) +
                              " (through a cycle one step left)");
          }
        }
      }
    }
  }

  for (int u = 0; u < len; ++u)
    for (const auto& x : eta[u])
      for (const auto& y : eta[u]) {
        if (x.to != y.from) continue;
        AnnotationTriple need{x.from, std::max(x.flag, y.flag), y.to};
        if (!has(u, need))
          return fail("missing-transitive-cycle",
                      "position " + std::to_string(u) + " lacks " +
                          triple_str(a, need.from, need.flag, need.to));
      }

  for (int u = 0; u < len; ++u)
    for (const auto& t : eta[u])
      if (t.flag == 0 && t.from == t.to)
        return fail("non-accepting-self-cycle",
                    "position " + std::to_string(u) + " contains " +
                        triple_str(a, t.from, 0, t.to));

  return CertCheck{};
}

}  // namespace aldlf
