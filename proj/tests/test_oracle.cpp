#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aldlf/oracle.hpp"
#include "generators.hpp"

using namespace aldlf;
using testgen::Rng;
using testgen::make_trace;

namespace {

// Independent replay of a walk: follow the labels through the nondeterministic
// transition relation and require some accepting state at the end.
bool replay_walk(const PathAutomaton& a, const Trace& t, const Walk& w) {
  std::vector<int> states;
  for (int s = 0; s < a.num_states(); ++s)
    if (s == a.start()) states.push_back(s);
  int pos = w.start;
  for (const auto& [at, label] : w.steps) {
    if (at != pos) return false;
    int next_pos = pos;
    switch (label.kind()) {
      case TransitionLabel::Kind::Future:
        if (!eval_prop(label.guard(), t.at(pos))) return false;
        next_pos = pos + 1;
        break;
      case TransitionLabel::Kind::Past:
        if (pos == 0 || !eval_prop(label.guard(), t.at(pos))) return false;
        next_pos = pos - 1;
        break;
      case TransitionLabel::Kind::Test:
        if (!eval(label.test_formula(), t, pos)) return false;
        break;
    }
    if (next_pos < 0 || next_pos >= t.length()) return false;
    std::vector<int> successors;
    for (int s : states)
      for (const auto& tr : a.transitions())
        if (tr.from == s && compare(tr.label, label) == 0)
          successors.push_back(tr.to);
    if (successors.empty()) return false;
    states = std::move(successors);
    pos = next_pos;
  }
  if (pos != w.end) return false;
  for (int s : states)
    if (a.is_accepting(s)) return true;
  return false;
}

AutomatonPtr single_edge(TransitionLabel label) {
  std::vector<Transition> ts;
  ts.push_back(Transition{0, std::move(label), 1});
  return PathAutomaton::make({"r0", "r1"}, std::move(ts), 0, {1});
}

}  // namespace

TEST_CASE("propositional satisfaction") {
  Interp with_p({"p"});
  Interp empty;
  CHECK(eval_prop(Prop::atom("p"), with_p));
  CHECK(eval_prop(Prop::negation(Prop::atom("p")), empty));
  CHECK(!eval_prop(Prop::conj(Prop::atom("p"), Prop::atom("q")), with_p));
  CHECK(eval_prop(Prop::truth(true), empty));
  CHECK(!eval_prop(Prop::truth(false), with_p));
}

TEST_CASE("eval base cases and modalities") {
  Trace t = make_trace({{"p"}});
  CHECK(eval(Formula::atom("p"), t, 0));
  CHECK(!eval(Formula::atom("q"), t, 0));

  // one advance-on-true edge: the diamond looks one step ahead
  AutomatonPtr n = single_edge(TransitionLabel::future(Prop::truth(true)));
  Trace two = make_trace({{}, {"p"}});
  CHECK(eval(Formula::diamond(n, Formula::atom("p")), two, 0));
  // no position reachable on a one-instant trace, so the box holds vacuously
  Trace one = make_trace({{}});
  CHECK(eval(Formula::box(n, Formula::atom("p")), one, 0));
  CHECK(!eval(Formula::diamond(n, Formula::atom("p")), one, 0));
}

TEST_CASE("eval rejects out-of-range positions") {
  Trace t = make_trace({{"p"}});
  CHECK_THROWS_AS(eval(Formula::atom("p"), t, 1), std::out_of_range);
  CHECK_THROWS_AS(eval(Formula::atom("p"), t, -1), std::out_of_range);
}

TEST_CASE("sat_automaton connects positions") {
  // empty connection at equal positions needs an accepting start
  AutomatonPtr accepting_start = trivial_automaton();
  Trace t = make_trace({{"p"}, {}});
  CHECK(sat_automaton(*accepting_start, t, 0, 0));
  CHECK(sat_automaton(*accepting_start, t, 1, 1));
  CHECK(!sat_automaton(*accepting_start, t, 0, 1));

  AutomatonPtr fwd = single_edge(TransitionLabel::future(Prop::atom("p")));
  CHECK(sat_automaton(*fwd, t, 0, 1));
  CHECK(!sat_automaton(*fwd, t, 1, 0));

  // the past guard is evaluated at the current position before retreating
  AutomatonPtr back = single_edge(TransitionLabel::past(Prop::atom("p")));
  Trace t2 = make_trace({{}, {"p"}});
  CHECK(sat_automaton(*back, t2, 1, 0));
  CHECK(!sat_automaton(*back, t2, 0, 0));
}

TEST_CASE("test-label cycles terminate") {
  // a true? self-loop plus an exit edge: reachability must not diverge
  std::vector<Transition> ts;
  ts.push_back(Transition{0, TransitionLabel::test(Formula::truth(true)), 0});
  ts.push_back(Transition{0, TransitionLabel::future(Prop::truth(true)), 1});
  AutomatonPtr u = PathAutomaton::make({"a", "b"}, std::move(ts), 0, {1});
  Trace t = make_trace({{}, {}});
  CHECK(sat_automaton(*u, t, 0, 1));
  CHECK(!sat_automaton(*u, t, 0, 0));
}

TEST_CASE("find_walk returns replayable shortest walks") {
  AutomatonPtr fwd = single_edge(TransitionLabel::future(Prop::atom("p")));
  Trace t = make_trace({{"p"}, {}});
  auto w = find_walk(*fwd, t, 0, 1);
  REQUIRE(w.has_value());
  CHECK(w->steps.size() == 1);
  CHECK(w->steps[0].first == 0);
  CHECK(replay_walk(*fwd, t, *w));

  // start accepting, equal endpoints: the empty walk
  auto empty = find_walk(*trivial_automaton(), t, 0, 0);
  REQUIRE(empty.has_value());
  CHECK(empty->steps.empty());
  CHECK(replay_walk(*trivial_automaton(), t, *empty));

  CHECK(!find_walk(*fwd, t, 1, 0).has_value());
}

TEST_CASE("sat_automaton agrees with find_walk") {
  Rng rng(1234);
  auto traces = testgen::all_traces(3);
  for (int i = 0; i < 120; ++i) {
    AutomatonPtr a = testgen::random_path_automaton(rng);
    for (const Trace& t : traces) {
      for (int from = 0; from < t.length(); ++from)
        for (int to = 0; to < t.length(); ++to) {
          auto walk = find_walk(*a, t, from, to);
          CHECK(sat_automaton(*a, t, from, to) == walk.has_value());
          if (walk) CHECK(replay_walk(*a, t, *walk));
        }
    }
  }
}

TEST_CASE("diamond and box are dual") {
  Rng rng(77);
  auto traces = testgen::all_traces(3);
  for (int i = 0; i < 40; ++i) {
    AutomatonPtr u = testgen::random_path_automaton(rng);
    FormulaPtr f = testgen::random_nnf_formula(rng, 8);
    FormulaPtr dia = Formula::diamond(u, f);
    FormulaPtr dual = Formula::negation(
        Formula::box(u, Formula::negation(f)));
    FormulaPtr box = Formula::box(u, f);
    FormulaPtr box_dual = Formula::negation(
        Formula::diamond(u, Formula::negation(f)));
    for (const Trace& t : traces)
      for (int pos = 0; pos < t.length(); ++pos) {
        CHECK(eval(dia, t, pos) == eval(dual, t, pos));
        CHECK(eval(box, t, pos) == eval(box_dual, t, pos));
      }
  }
}

TEST_CASE("re-rooting onto an accepting state connects equal positions") {
  Rng rng(31);
  Trace t = make_trace({{}, {"p"}});
  for (int i = 0; i < 50; ++i) {
    AutomatonPtr a = testgen::random_path_automaton(rng);
    for (int g : a->accepting()) {
      AutomatonPtr rerooted = a->re_rooted(g);
      for (int pos = 0; pos < t.length(); ++pos)
        CHECK(sat_automaton(*rerooted, t, pos, pos));
    }
  }
}
