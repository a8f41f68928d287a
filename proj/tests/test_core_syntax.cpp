#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aldlf/formula.hpp"
#include "aldlf/oracle.hpp"
#include "generators.hpp"

using namespace aldlf;
using testgen::Rng;

namespace {

AutomatonPtr two_state_automaton_with_test() {
  // states r0, r1; future edge r0->r1 on p; test edge r1->r0 on q
  std::vector<Transition> ts;
  ts.push_back(Transition{0, TransitionLabel::future(Prop::atom("p")), 1});
  ts.push_back(Transition{1, TransitionLabel::test(Formula::atom("q")), 0});
  return PathAutomaton::make({"r0", "r1"}, std::move(ts), 0, {1});
}

bool closure_contains(const std::vector<FormulaPtr>& cl, const FormulaPtr& f) {
  for (const auto& g : cl)
    if (equal(g, f)) return true;
  return false;
}

}  // namespace

TEST_CASE("formula size follows the size recursion") {
  FormulaPtr p = Formula::atom("p");
  CHECK(formula_size(p) == 1);
  CHECK(formula_size(Formula::negation(p)) == 4);

  AutomatonPtr u = two_state_automaton_with_test();
  CHECK(formula_size(Formula::diamond(u, p)) == 7);  // 4 + |R| + |p|
  CHECK(formula_size(Formula::box(u, p)) == 7);
  CHECK(formula_size(Formula::conj(p, Formula::atom("q"))) == 5);

  // compound propositional payloads measure by the same recursion
  FormulaPtr compound = Formula::prop(
      Prop::conj(Prop::atom("p"), Prop::negation(Prop::atom("q"))));
  CHECK(formula_size(compound) == 1 + 3 + (3 + 1));
  CHECK(formula_size(Formula::truth(true)) == 1);
}

TEST_CASE("automaton size is the transition count") {
  AutomatonPtr u = two_state_automaton_with_test();
  CHECK(automaton_size(*u) == 2);
  CHECK(automaton_size(*trivial_automaton()) == 1);

  // a state can have many transitions, so |states| <= |transitions| but the
  // converse bound does not hold
  std::vector<Transition> ts;
  ts.push_back(Transition{0, TransitionLabel::future(Prop::atom("p")), 0});
  ts.push_back(Transition{0, TransitionLabel::future(Prop::atom("q")), 0});
  AutomatonPtr loops = PathAutomaton::make({"s"}, std::move(ts), 0, {});
  CHECK(automaton_size(*loops) == 2);
  CHECK(loops->num_states() == 1);
}

TEST_CASE("validate_automaton reports structural problems") {
  CHECK(validate_automaton(*trivial_automaton()).empty());

  // isolated state
  std::vector<Transition> one;
  one.push_back(Transition{0, TransitionLabel::future(Prop::truth(true)), 0});
  AutomatonPtr isolated =
      PathAutomaton::make({"a", "b"}, std::move(one), 0, {});
  auto violations = validate_automaton(*isolated);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("isolated state b") != std::string::npos);

  // dangling start and accepting ids
  std::vector<Transition> two;
  two.push_back(Transition{0, TransitionLabel::future(Prop::truth(true)), 0});
  AutomatonPtr dangling = PathAutomaton::make({"a"}, std::move(two), 3, {7});
  violations = validate_automaton(*dangling);
  CHECK(violations.size() == 2);

  // transition referencing an unknown state
  std::vector<Transition> three;
  three.push_back(Transition{0, TransitionLabel::future(Prop::truth(true)), 5});
  AutomatonPtr unknown = PathAutomaton::make({"a"}, std::move(three), 0, {});
  violations = validate_automaton(*unknown);
  REQUIRE(!violations.empty());
  CHECK(violations[0].find("target") != std::string::npos);
}

TEST_CASE("to_nnf pushes negations to atoms") {
  FormulaPtr p = Formula::atom("p");
  FormulaPtr q = Formula::atom("q");

  FormulaPtr demorgan = to_nnf(Formula::negation(Formula::conj(p, q)));
  CHECK(equal(demorgan, Formula::disj(Formula::negation(p),
                                      Formula::negation(q))));

  AutomatonPtr u = two_state_automaton_with_test();
  FormulaPtr boxed = to_nnf(Formula::negation(Formula::diamond(u, p)));
  REQUIRE(boxed->kind() == Formula::Kind::Box);
  CHECK(equal(boxed->lhs(), Formula::negation(p)));

  CHECK(equal(to_nnf(p), p));
  CHECK(equal(to_nnf(Formula::negation(Formula::truth(true))),
              Formula::truth(false)));
  CHECK(is_nnf(to_nnf(Formula::negation(Formula::box(u, Formula::negation(p))))));
}

TEST_CASE("to_nnf normalizes tests inside automata") {
  std::vector<Transition> ts;
  ts.push_back(Transition{
      0,
      TransitionLabel::test(Formula::negation(
          Formula::conj(Formula::atom("p"), Formula::atom("q")))),
      0});
  AutomatonPtr u = PathAutomaton::make({"s"}, std::move(ts), 0, {0});
  FormulaPtr f = Formula::diamond(u, Formula::atom("p"));
  CHECK(!is_nnf(f));
  FormulaPtr n = to_nnf(f);
  CHECK(is_nnf(n));
  const auto& label = n->automaton()->transitions()[0].label;
  CHECK(label.test_formula()->kind() == Formula::Kind::Or);
}

TEST_CASE("closure of simple shapes") {
  FormulaPtr p = Formula::atom("p");
  FormulaPtr q = Formula::atom("q");

  auto cl = fischer_ladner_closure(p);
  REQUIRE(cl.size() == 1);
  CHECK(equal(cl[0], p));

  auto cl_and = fischer_ladner_closure(Formula::conj(p, q));
  CHECK(cl_and.size() == 3);
  CHECK(closure_contains(cl_and, p));
  CHECK(closure_contains(cl_and, q));
}

TEST_CASE("closure covers re-rootings and tests of diamond modalities") {
  AutomatonPtr u = two_state_automaton_with_test();
  FormulaPtr p = Formula::atom("p");
  FormulaPtr f = Formula::diamond(u, p);

  auto cl = fischer_ladner_closure(f);
  CHECK(closure_contains(cl, f));
  CHECK(closure_contains(cl, Formula::diamond(u->re_rooted(1), p)));
  CHECK(closure_contains(cl, p));
  CHECK(closure_contains(cl, Formula::atom("q")));
  CHECK(cl.size() == 4);
}

TEST_CASE("box closure adds the normalized negation of each test") {
  AutomatonPtr u = two_state_automaton_with_test();
  FormulaPtr p = Formula::atom("p");
  auto cl = fischer_ladner_closure(Formula::box(u, p));
  CHECK(closure_contains(cl, Formula::atom("q")));
  CHECK(closure_contains(cl, Formula::negation(Formula::atom("q"))));
}

TEST_CASE("closure stays within the formula size") {
  Rng rng(20240811);
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = testgen::random_nnf_formula(rng, 25);
    auto cl = fischer_ladner_closure(f);
    CHECK(static_cast<long>(cl.size()) <= formula_size(f));
  }
}

TEST_CASE("closure is closed under re-rooting") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    FormulaPtr f = testgen::random_nnf_formula(rng, 20);
    auto cl = fischer_ladner_closure(f);
    CHECK(closure_contains(cl, f));
    for (const auto& g : cl) {
      if (g->kind() != Formula::Kind::Diamond &&
          g->kind() != Formula::Kind::Box)
        continue;
      const AutomatonPtr& u = g->automaton();
      for (int r = 0; r < u->num_states(); ++r) {
        FormulaPtr rerooted =
            g->kind() == Formula::Kind::Diamond
                ? Formula::diamond(u->re_rooted(r), g->lhs())
                : Formula::box(u->re_rooted(r), g->lhs());
        CHECK(closure_contains(cl, rerooted));
      }
    }
  }
}

TEST_CASE("to_nnf is idempotent") {
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = testgen::random_formula(rng, 20);
    FormulaPtr once = to_nnf(f);
    CHECK(is_nnf(once));
    CHECK(equal(once, to_nnf(once)));
  }
}

TEST_CASE("to_nnf preserves the language on small traces") {
  Rng rng(4242);
  auto traces = testgen::all_traces(4);
  for (int i = 0; i < 60; ++i) {
    FormulaPtr f = testgen::random_formula(rng, 14);
    FormulaPtr n = to_nnf(f);
    for (const Trace& t : traces)
      for (int pos = 0; pos < t.length(); ++pos)
        CHECK(eval(f, t, pos) == eval(n, t, pos));
  }
}

TEST_CASE("structural equality distinguishes start states") {
  AutomatonPtr u = two_state_automaton_with_test();
  CHECK(equal(u, u->re_rooted(0)));
  CHECK(!equal(u, u->re_rooted(1)));
  FormulaPtr p = Formula::atom("p");
  CHECK(!equal(Formula::diamond(u, p), Formula::diamond(u->re_rooted(1), p)));
  CHECK(equal(Formula::diamond(u, p), Formula::diamond(u->re_rooted(0), p)));
}
