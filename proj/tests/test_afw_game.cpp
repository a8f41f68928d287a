#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afw_fixtures.hpp"
#include "aldlf/game.hpp"
#include "aldlf/ltlf.hpp"
#include "aldlf/oracle.hpp"
#include "generators.hpp"

using namespace aldlf;
using testgen::Rng;
using testgen::make_trace;

namespace {

MoveSet moves(std::initializer_list<Move> ms) {
  MoveSet out(ms);
  std::sort(out.begin(), out.end());
  return out;
}

int state_index(const Afw& a, const FormulaPtr& f) {
  for (int q = 0; q < a.num_states(); ++q)
    if (equal(a.state_formulas[q], f)) return q;
  return -1;
}

}  // namespace

TEST_CASE("minimal models") {
  PosBoolPtr x = PosBool::atom(0, 0);
  PosBoolPtr y = PosBool::atom(1, 1);

  CHECK(minimal_models(x) == std::vector<MoveSet>{moves({{0, 0}})});
  CHECK(minimal_models(PosBool::disj(x, y)) ==
        std::vector<MoveSet>{moves({{0, 0}}), moves({{1, 1}})});
  // absorption: a & (a | b) has a single minimal model {a}
  CHECK(minimal_models(PosBool::conj(x, PosBool::disj(x, y))) ==
        std::vector<MoveSet>{moves({{0, 0}})});
  CHECK(minimal_models(PosBool::truth(false)).empty());
  CHECK(is_always_true(minimal_models(PosBool::truth(true))));
  // a formula equivalent to true is recognized as such
  CHECK(is_always_true(minimal_models(PosBool::disj(PosBool::truth(true), x))));
}

TEST_CASE("positive formulas are monotone") {
  Rng rng(5);
  for (int round = 0; round < 200; ++round) {
    std::vector<PosBoolPtr> leaves;
    for (int i = 0; i < 4; ++i)
      leaves.push_back(PosBool::atom(rng.range(0, 2), rng.range(-1, 1)));
    PosBoolPtr b = PosBool::conj(PosBool::disj(leaves[0], leaves[1]),
                                 PosBool::disj(leaves[2], leaves[3]));
    for (const MoveSet& m : minimal_models(b)) {
      CHECK(satisfies(m, *b));
      MoveSet bigger = m;
      bigger.push_back(Move{rng.range(0, 2), rng.range(-1, 1)});
      std::sort(bigger.begin(), bigger.end());
      bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
      CHECK(satisfies(bigger, *b));
    }
  }
}

TEST_CASE("compiled transition function on propositional states") {
  Afw a = compile_formula(Formula::atom("p"));
  REQUIRE(a.num_states() == 1);
  DeltaCache cache(a);
  CHECK(cache.is_true(0, Interp({"p"})));
  CHECK(cache.is_false(0, Interp(std::vector<std::string>{})));
}

TEST_CASE("compiled accepting set is exactly the box states") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    FormulaPtr f = testgen::random_nnf_formula(rng, 20);
    Afw a = compile_formula(f);
    for (int q = 0; q < a.num_states(); ++q)
      CHECK(a.accepting[q] ==
            (a.state_formulas[q]->kind() == Formula::Kind::Box));
    CHECK(equal(a.state_formulas[a.start], f));
  }
}

TEST_CASE("compile requires negation normal form") {
  FormulaPtr f = Formula::negation(
      Formula::conj(Formula::atom("p"), Formula::atom("q")));
  CHECK_THROWS_AS(compile_formula(f), std::invalid_argument);
}

TEST_CASE("state count stays within twice the formula size") {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    FormulaPtr f = testgen::random_nnf_formula(rng, 25);
    Afw a = compile_formula(f);
    CHECK(a.num_states() <= 2 * formula_size(f));
  }
}

TEST_CASE("diamond over the advance automaton moves right") {
  // the translation of strong next: one advance-on-true edge
  LtlfPtr next_p = Ltlf::next(Ltlf::atom("p"));
  FormulaPtr f = ltlf_to_aldlf(next_p);
  Afw a = compile_formula(f);
  DeltaCache cache(a);

  const AutomatonPtr& u = f->automaton();
  FormulaPtr continued = Formula::diamond(u->re_rooted(1), f->lhs());
  int target = state_index(a, continued);
  REQUIRE(target >= 0);

  // non-accepting start: exactly one way to proceed, stepping right
  auto models = cache.models(a.start, Interp(std::vector<std::string>{}));
  REQUIRE(models.size() == 1);
  CHECK(models[0] == moves({{target, 1}}));
}

TEST_CASE("buchi game unit shapes") {
  auto make_graph = [](int n) {
    GameGraph g;
    g.nodes.resize(static_cast<std::size_t>(n));
    g.succ.resize(static_cast<std::size_t>(n));
    g.pred.resize(static_cast<std::size_t>(n));
    g.target.resize(static_cast<std::size_t>(n), false);
    return g;
  };
  auto edge = [](GameGraph& g, int from, int to) {
    g.succ[from].push_back(to);
    g.pred[to].push_back(from);
  };

  // protagonist choice into the accept sink wins
  {
    GameGraph g = make_graph(3);
    g.nodes[0] = {true, -1, -1, -1};  // accept sink
    g.target[0] = true;
    g.nodes[1] = {false, -1, -1, -1};  // reject sink
    g.nodes[2] = {true, 0, 0, -1};
    edge(g, 0, 0);
    edge(g, 1, 1);
    edge(g, 2, 0);
    edge(g, 2, 1);
    g.start_node = 2;
    CHECK(solve_buchi_game(g)[2]);
  }
  // a two-node cycle with no targets loses
  {
    GameGraph g = make_graph(2);
    g.nodes[0] = {true, 0, 0, -1};
    g.nodes[1] = {false, 1, 0, -1};
    edge(g, 0, 1);
    edge(g, 1, 0);
    g.start_node = 0;
    CHECK(!solve_buchi_game(g)[0]);
  }
  // the same cycle through a target node wins
  {
    GameGraph g = make_graph(2);
    g.nodes[0] = {true, 0, 0, -1};
    g.nodes[1] = {false, 1, 0, -1};
    g.target[0] = true;
    edge(g, 0, 1);
    edge(g, 1, 0);
    g.start_node = 0;
    CHECK(solve_buchi_game(g)[0]);
  }
}

TEST_CASE("acceptance game on the loop-or-accept automaton") {
  Afw a = testfix::loop_or_accept();
  Trace w = testfix::word_a();
  CHECK(accepts_game(a, w, 0));

  // removing the escape leaves only a non-accepting cycle
  Afw crippled = testfix::loop_only();
  CHECK(!accepts_game(crippled, w, 0));
}

TEST_CASE("false transitions reject immediately") {
  Afw a = testfix::table_afw({"q0"}, {{0, PosBool::truth(false)}}, {false});
  CHECK(!accepts_game(a, testfix::word_a(), 0));
}

TEST_CASE("game agrees with the direct semantics") {
  Rng rng(31337);
  auto traces = testgen::all_traces(3);
  for (int i = 0; i < 60; ++i) {
    FormulaPtr f = testgen::random_nnf_formula(rng, 20);
    Afw a = compile_formula(f);
    for (const Trace& t : traces)
      for (int pos = 0; pos < t.length(); ++pos)
        CHECK(eval(f, t, pos) == accepts_game(a, t, pos));
  }
}

TEST_CASE("negation flips game acceptance") {
  Rng rng(555);
  auto traces = testgen::all_traces(2);
  for (int i = 0; i < 30; ++i) {
    FormulaPtr f = testgen::random_nnf_formula(rng, 15);
    Afw pos = compile_formula(f);
    Afw neg = compile_formula(to_nnf_negated(f));
    for (const Trace& t : traces)
      for (int position = 0; position < t.length(); ++position)
        CHECK(accepts_game(pos, t, position) !=
              accepts_game(neg, t, position));
  }
}

TEST_CASE("game start position is validated") {
  Afw a = compile_formula(Formula::atom("p"));
  Trace t = make_trace({{"p"}});
  CHECK_THROWS_AS(accepts_game(a, t, 1), std::out_of_range);
}
