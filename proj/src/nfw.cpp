#include "aldlf/nfw.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "aldlf/sat.hpp"

namespace aldlf {

bool NfwState::operator<(const NfwState& o) const {
  if (control != o.control) return control < o.control;
  if (first != o.first) return first < o.first;
  if (letter != o.letter) return letter < o.letter;
  if (moves != o.moves) return moves < o.moves;
  return cycles < o.cycles;
}

NfwState nfw_initial() { return NfwState{}; }

namespace {

int final_flag(const Afw& a, int q) { return a.is_final(q) ? 1 : 0; }

using TripleSet = std::set<AnnotationTriple>;

void transitive_close(TripleSet& s) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<AnnotationTriple> snapshot(s.begin(), s.end());
    for (const auto& x : snapshot)
      for (const auto& y : snapshot)
        if (x.to == y.from &&
            s.insert({x.from, std::max(x.flag, y.flag), y.to}).second)
          changed = true;
  }
}

bool has_self_zero(const TripleSet& s) {
  for (const auto& t : s)
    if (t.flag == 0 && t.from == t.to) return true;
  return false;
}

// Enumerates strategy letters: each scheduled origin picks one minimal model
// of its boundary-adjusted transition formula; zero-move targets that are
// not immediately accepting must be scheduled too, so they join the pending
// queue. Boundary adjustment already removed moves that would leave the
// word, so no letter here violates the boundary rules.
void assemble_letters(const Afw& a, DeltaCache& cache, const Interp& letter,
                      bool at_first, bool at_last, std::vector<int> pending,
                      std::set<int> scheduled, std::set<StrategyTriple> moves,
                      std::set<StrategyLetter>& out) {
  while (!pending.empty() && scheduled.count(pending.back()))
    pending.pop_back();
  if (pending.empty()) {
    out.insert(StrategyLetter(moves.begin(), moves.end()));
    return;
  }
  int q = pending.back();
  pending.pop_back();
  scheduled.insert(q);
  for (const MoveSet& model : cache.models(q, letter, at_first, at_last)) {
    auto next_pending = pending;
    auto next_moves = moves;
    for (const Move& mv : model) {
      next_moves.insert(StrategyTriple{q, mv.dir, mv.state});
      if (mv.dir == 0 && !scheduled.count(mv.state) &&
          !cache.is_true(mv.state, letter, at_first, at_last))
        next_pending.push_back(mv.state);
    }
    assemble_letters(a, cache, letter, at_first, at_last,
                     std::move(next_pending), scheduled, std::move(next_moves),
                     out);
  }
}

}  // namespace

std::vector<NfwState> nfw_successors(const Afw& a, const NfwState& s,
                                     const Interp& letter, bool at_last,
                                     DeltaCache& cache) {
  bool initial = s.control == NfwState::Control::Initial;

  // Origins forced by incoming rightward moves (or the start state).
  std::vector<int> forced;
  if (initial) {
    if (!cache.is_true(a.start, letter, true, at_last))
      forced.push_back(a.start);
  } else {
    for (const auto& t : s.moves)
      if (t.dir == 1 && !cache.is_true(t.to, letter, false, at_last))
        forced.push_back(t.to);
  }
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());

  // Additional origins may be scheduled now so that later leftward moves
  // find them; enumerate subsets of the possible return targets.
  std::vector<int> volunteers;
  if (!at_last)
    for (int v : cache.past_move_targets())
      if (!std::binary_search(forced.begin(), forced.end(), v) &&
          !cache.is_true(v, letter, initial, at_last))
        volunteers.push_back(v);

  if (volunteers.size() > 20)
    throw SearchLimitExceeded(
        "too many candidate return targets to enumerate");

  std::set<StrategyLetter> letters;
  for (std::uint64_t mask = 0;
       mask < (std::uint64_t{1} << volunteers.size()); ++mask) {
    std::vector<int> seed = forced;
    for (std::size_t i = 0; i < volunteers.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) seed.push_back(volunteers[i]);
    assemble_letters(a, cache, letter, initial, at_last, std::move(seed), {},
                     {}, letters);
  }

  std::set<NfwState> result;
  for (const StrategyLetter& m : letters) {
    // Leftward moves must land on a state the previous letter schedules or
    // immediately accepts.
    bool ok = true;
    bool pending_right = false;
    std::vector<int> prev_origins = origin_states(s.moves);
    for (const auto& t : m) {
      if (t.dir == 1) pending_right = true;
      if (t.dir == -1) {
        if (initial ||
            (!std::binary_search(prev_origins.begin(), prev_origins.end(),
                                 t.to) &&
             !cache.is_true(t.to, s.letter, s.first, false))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    // Cycles forced within this letter and by dips into the previous one.
    TripleSet base;
    for (const auto& t : m)
      if (t.dir == 0) base.insert({t.from, final_flag(a, t.to), t.to});
    if (!initial) {
      for (const auto& t : m) {
        if (t.dir != -1) continue;
        for (const auto& back : s.moves)
          if (back.dir == 1 && back.from == t.to)
            base.insert({t.from,
                         std::max(final_flag(a, t.to), final_flag(a, back.to)),
                         back.to});
        for (const auto& cyc : s.cycles) {
          if (cyc.from != t.to) continue;
          for (const auto& back : s.moves)
            if (back.dir == 1 && back.from == cyc.to)
              base.insert({t.from,
                           std::max({final_flag(a, t.to), cyc.flag,
                                     final_flag(a, back.to)}),
                           back.to});
        }
      }
    }

    // Guess which rightward excursions will come back, and in which state.
    std::vector<AnnotationTriple> guesses;
    if (!at_last) {
      std::set<int> right_origins;
      for (const auto& t : m)
        if (t.dir == 1) right_origins.insert(t.from);
      for (int q : right_origins)
        for (int v : cache.past_move_targets())
          for (int flag : {0, 1})
            if (!base.count({q, flag, v}))
              guesses.push_back({q, flag, v});
    }
    if (guesses.size() > 16)
      throw SearchLimitExceeded("too many rightward-return guesses");

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << guesses.size());
         ++mask) {
      TripleSet cycles = base;
      for (std::size_t i = 0; i < guesses.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) cycles.insert(guesses[i]);
      transitive_close(cycles);
      if (has_self_zero(cycles)) continue;

      // Rightward excursions of the previous letter must already be
      // recorded there, now that this letter fixes how they return.
      if (!initial) {
        bool consistent = true;
        for (const auto& t : s.moves) {
          if (t.dir != 1) continue;
          for (const auto& back : m) {
            if (back.dir != -1) continue;
            if (back.from == t.to &&
                !annotation_contains(
                    s.cycles,
                    {t.from,
                     std::max(final_flag(a, t.to), final_flag(a, back.to)),
                     back.to})) {
              consistent = false;
              break;
            }
          }
          if (!consistent) break;
          for (const auto& cyc : cycles) {
            if (cyc.from != t.to) continue;
            for (const auto& back : m) {
              if (back.dir != -1 || back.from != cyc.to) continue;
              if (!annotation_contains(
                      s.cycles,
                      {t.from,
                       std::max({final_flag(a, t.to), cyc.flag,
                                 final_flag(a, back.to)}),
                       back.to})) {
                consistent = false;
                break;
              }
            }
            if (!consistent) break;
          }
          if (!consistent) break;
        }
        if (!consistent) continue;
      }

      NfwState succ;
      succ.control = pending_right ? NfwState::Control::PendingRight
                                   : NfwState::Control::AcceptingReady;
      succ.first = initial;
      succ.letter = letter;
      succ.moves = m;
      succ.cycles = AnnotationLetter(cycles.begin(), cycles.end());
      result.insert(std::move(succ));
    }
  }
  return {result.begin(), result.end()};
}

namespace {

struct SearchNode {
  NfwState state;
  int parent = -1;  // index into the node arena
};

}  // namespace

std::optional<Certificate> nfw_accepting_certificate(const Afw& a,
                                                     const Trace& w) {
  DeltaCache cache(a);
  std::vector<SearchNode> arena;
  std::vector<int> frontier;
  arena.push_back({nfw_initial(), -1});
  frontier.push_back(0);

  for (int u = 0; u < w.length(); ++u) {
    bool at_last = u == w.length() - 1;
    std::map<NfwState, int> layer;  // dedup within the layer
    for (int id : frontier) {
      for (NfwState& succ :
           nfw_successors(a, arena[id].state, w.at(u), at_last, cache)) {
        if (layer.count(succ)) continue;
        arena.push_back({succ, id});
        layer.emplace(std::move(succ), static_cast<int>(arena.size()) - 1);
      }
    }
    frontier.clear();
    for (auto& [state, id] : layer) frontier.push_back(id);
    if (frontier.empty()) return std::nullopt;
  }

  for (int id : frontier) {
    if (arena[id].state.control != NfwState::Control::AcceptingReady)
      continue;
    Certificate cert;
    for (int cur = id; cur > 0; cur = arena[cur].parent) {
      cert.gamma.push_back(arena[cur].state.moves);
      cert.eta.push_back(arena[cur].state.cycles);
    }
    std::reverse(cert.gamma.begin(), cert.gamma.end());
    std::reverse(cert.eta.begin(), cert.eta.end());
    return cert;
  }
  return std::nullopt;
}

bool nfw_accepts(const Afw& a, const Trace& w) {
  return nfw_accepting_certificate(a, w).has_value();
}

}  // namespace aldlf
