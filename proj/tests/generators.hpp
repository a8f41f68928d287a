#pragma once

// Random instances for the property suites. Test labels inside generated
// automata are atoms or negated atoms only; richer tests do not add closure
// coverage but break the linear closure bound, which counts automaton states
// rather than test sizes.

#include <random>
#include <string>
#include <vector>

#include "aldlf/formula.hpp"
#include "aldlf/ltlf.hpp"
#include "aldlf/trace.hpp"

namespace aldlf::testgen {

class Rng {
public:
  explicit Rng(unsigned seed) : engine_(seed) {}

  int range(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
  }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<int>(v.size()) - 1))];
  }

private:
  std::mt19937 engine_;
};

inline const std::vector<std::string>& atom_pool() {
  static const std::vector<std::string> atoms{"p", "q"};
  return atoms;
}

inline PropPtr random_guard(Rng& rng) {
  switch (rng.range(0, 7)) {
    case 0:
      return Prop::truth(true);
    case 1:
      return Prop::truth(false);
    case 2:
      return Prop::negation(Prop::atom(rng.pick(atom_pool())));
    case 3:
      return Prop::conj(Prop::atom(atom_pool()[0]), Prop::atom(atom_pool()[1]));
    case 4:
      return Prop::disj(Prop::atom(atom_pool()[0]),
                        Prop::negation(Prop::atom(atom_pool()[1])));
    default:
      return Prop::atom(rng.pick(atom_pool()));
  }
}

inline FormulaPtr random_test_label(Rng& rng) {
  FormulaPtr atom = Formula::atom(rng.pick(atom_pool()));
  return rng.chance(0.4) ? Formula::negation(atom) : atom;
}

inline AutomatonPtr random_path_automaton(Rng& rng, int max_states = 4) {
  int n = rng.range(1, max_states);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("r" + std::to_string(i));

  auto random_label = [&]() {
    int roll = rng.range(0, 9);
    if (roll < 4) return TransitionLabel::future(random_guard(rng));
    if (roll < 7) return TransitionLabel::past(random_guard(rng));
    return TransitionLabel::test(random_test_label(rng));
  };

  std::vector<Transition> ts;
  if (n == 1) {
    ts.push_back(Transition{0, random_label(), 0});
  } else {
    // connect each new state to an earlier one, so every state occurs
    for (int s = 1; s < n; ++s) {
      int t = rng.range(0, s - 1);
      if (rng.chance(0.5))
        ts.push_back(Transition{t, random_label(), s});
      else
        ts.push_back(Transition{s, random_label(), t});
    }
  }
  int extra = rng.range(0, 3);
  for (int i = 0; i < extra; ++i)
    ts.push_back(
        Transition{rng.range(0, n - 1), random_label(), rng.range(0, n - 1)});

  std::vector<int> accepting;
  for (int s = 0; s < n; ++s)
    if (rng.chance(0.4)) accepting.push_back(s);

  return PathAutomaton::make(std::move(names), std::move(ts),
                             rng.range(0, n - 1), std::move(accepting));
}

// A random formula in negation normal form with formula size <= budget.
inline FormulaPtr random_nnf_formula(Rng& rng, long budget) {
  auto leaf = [&]() -> FormulaPtr {
    switch (rng.range(0, 9)) {
      case 0:
        return Formula::truth(true);
      case 1:
        return Formula::truth(false);
      case 2:
      case 3:
        return Formula::negation(Formula::atom(rng.pick(atom_pool())));
      default:
        return Formula::atom(rng.pick(atom_pool()));
    }
  };
  if (budget < 5) return leaf();
  int roll = rng.range(0, 9);
  if (roll < 3) return leaf();
  if (roll < 6) {  // binary connective: 3 + |l| + |r|
    long left = (budget - 3) / 2;
    FormulaPtr l = random_nnf_formula(rng, left);
    FormulaPtr r = random_nnf_formula(rng, budget - 3 - formula_size(l));
    return rng.chance(0.5) ? Formula::conj(l, r) : Formula::disj(l, r);
  }
  // modality: 4 + |R| + |payload|
  AutomatonPtr u = random_path_automaton(rng);
  long payload_budget = budget - 4 - u->num_states();
  if (payload_budget < 1) return leaf();
  FormulaPtr payload = random_nnf_formula(rng, payload_budget);
  return rng.chance(0.5) ? Formula::diamond(u, payload)
                         : Formula::box(u, payload);
}

// Arbitrary formulas (negations anywhere) for the normalization properties.
inline FormulaPtr random_formula(Rng& rng, long budget) {
  FormulaPtr f = random_nnf_formula(rng, budget);
  for (int i = rng.range(0, 2); i > 0; --i)
    if (rng.chance(0.5)) f = Formula::negation(f);
  return f;
}

inline LtlfPtr random_ltlf(Rng& rng, int nodes) {
  if (nodes <= 1) return Ltlf::atom(rng.pick(atom_pool()));
  switch (rng.range(0, 5)) {
    case 0:
      return Ltlf::negation(random_ltlf(rng, nodes - 1));
    case 1:
      return Ltlf::next(random_ltlf(rng, nodes - 1));
    case 2: {
      int left = rng.range(1, nodes - 2 > 0 ? nodes - 2 : 1);
      return Ltlf::until(random_ltlf(rng, left),
                         random_ltlf(rng, nodes - 1 - left));
    }
    case 3: {
      int left = rng.range(1, nodes - 2 > 0 ? nodes - 2 : 1);
      return Ltlf::conj(random_ltlf(rng, left),
                        random_ltlf(rng, nodes - 1 - left));
    }
    default: {
      int left = rng.range(1, nodes - 2 > 0 ? nodes - 2 : 1);
      return Ltlf::disj(random_ltlf(rng, left),
                        random_ltlf(rng, nodes - 1 - left));
    }
  }
}

// All traces over the atom pool with length in [1, max_len].
inline std::vector<Trace> all_traces(int max_len) {
  const auto& atoms = atom_pool();
  std::vector<Interp> letters;
  for (int mask = 0; mask < (1 << atoms.size()); ++mask) {
    std::vector<std::string> present;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask & (1 << i)) present.push_back(atoms[i]);
    letters.emplace_back(std::move(present));
  }
  std::vector<Trace> traces;
  std::vector<std::size_t> idx;
  for (int len = 1; len <= max_len; ++len) {
    idx.assign(static_cast<std::size_t>(len), 0);
    for (;;) {
      std::vector<Interp> instants;
      for (std::size_t i : idx) instants.push_back(letters[i]);
      traces.emplace_back(std::move(instants));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == letters.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return traces;
}

inline Trace make_trace(std::vector<std::vector<std::string>> instants) {
  std::vector<Interp> out;
  for (auto& i : instants) out.emplace_back(std::move(i));
  return Trace(std::move(out));
}

}  // namespace aldlf::testgen
