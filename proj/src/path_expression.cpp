#include "aldlf/path_expression.hpp"

#include "aldlf/formula.hpp"

namespace aldlf {

PathExpression::PathExpression(Kind kind, PropPtr guard, FormulaPtr test,
                               PathExprPtr lhs, PathExprPtr rhs)
    : kind_(kind), guard_(std::move(guard)), test_(std::move(test)),
      lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

PathExprPtr PathExpression::future(PropPtr guard) {
  return PathExprPtr(new PathExpression(Kind::Future, std::move(guard),
                                        nullptr, nullptr, nullptr));
}
PathExprPtr PathExpression::past(PropPtr guard) {
  return PathExprPtr(new PathExpression(Kind::Past, std::move(guard), nullptr,
                                        nullptr, nullptr));
}
PathExprPtr PathExpression::test(FormulaPtr f) {
  return PathExprPtr(
      new PathExpression(Kind::Test, nullptr, std::move(f), nullptr, nullptr));
}
PathExprPtr PathExpression::concat(PathExprPtr a, PathExprPtr b) {
  return PathExprPtr(new PathExpression(Kind::Concat, nullptr, nullptr,
                                        std::move(a), std::move(b)));
}
PathExprPtr PathExpression::alt(PathExprPtr a, PathExprPtr b) {
  return PathExprPtr(new PathExpression(Kind::Union, nullptr, nullptr,
                                        std::move(a), std::move(b)));
}
PathExprPtr PathExpression::star(PathExprPtr e) {
  return PathExprPtr(new PathExpression(Kind::Star, nullptr, nullptr,
                                        std::move(e), nullptr));
}
PathExprPtr PathExpression::epsilon() {
  return PathExprPtr(
      new PathExpression(Kind::Epsilon, nullptr, nullptr, nullptr, nullptr));
}

namespace {

// Fragment under construction: states are global indices, one entry, one
// exit. Epsilon edges are tests on true: a test that always passes moves
// state without consuming input.
struct Fragment {
  int entry = 0;
  int exit = 0;
};

class Builder {
public:
  Fragment build(const PathExprPtr& e) {
    switch (e->kind()) {
      case PathExpression::Kind::Future:
        return leaf(TransitionLabel::future(e->guard()));
      case PathExpression::Kind::Past:
        return leaf(TransitionLabel::past(e->guard()));
      case PathExpression::Kind::Test:
        return leaf(TransitionLabel::test(e->test_formula()));
      case PathExpression::Kind::Epsilon:
        return leaf(epsilon_label());
      case PathExpression::Kind::Concat: {
        Fragment a = build(e->lhs());
        Fragment b = build(e->rhs());
        edge(a.exit, epsilon_label(), b.entry);
        return {a.entry, b.exit};
      }
      case PathExpression::Kind::Union: {
        Fragment a = build(e->lhs());
        Fragment b = build(e->rhs());
        int entry = fresh();
        int exit = fresh();
        edge(entry, epsilon_label(), a.entry);
        edge(entry, epsilon_label(), b.entry);
        edge(a.exit, epsilon_label(), exit);
        edge(b.exit, epsilon_label(), exit);
        return {entry, exit};
      }
      case PathExpression::Kind::Star: {
        Fragment a = build(e->lhs());
        int entry = fresh();
        int exit = fresh();
        edge(entry, epsilon_label(), exit);     // zero iterations
        edge(entry, epsilon_label(), a.entry);
        edge(a.exit, epsilon_label(), a.entry);  // loop
        edge(a.exit, epsilon_label(), exit);
        return {entry, exit};
      }
    }
    return leaf(epsilon_label());
  }

  AutomatonPtr finish(Fragment f) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(count_));
    for (int i = 0; i < count_; ++i) names.push_back("s" + std::to_string(i));
    return PathAutomaton::make(std::move(names), std::move(transitions_),
                               f.entry, {f.exit});
  }

private:
  static TransitionLabel epsilon_label() {
    return TransitionLabel::test(Formula::truth(true));
  }

  int fresh() { return count_++; }

  void edge(int from, TransitionLabel label, int to) {
    transitions_.push_back(Transition{from, std::move(label), to});
  }

  Fragment leaf(TransitionLabel label) {
    int entry = fresh();
    int exit = fresh();
    edge(entry, std::move(label), exit);
    return {entry, exit};
  }

  int count_ = 0;
  std::vector<Transition> transitions_;
};

}  // namespace

AutomatonPtr regex_to_automaton(const PathExprPtr& e) {
  Builder b;
  Fragment f = b.build(e);
  return b.finish(f);
}

}  // namespace aldlf
