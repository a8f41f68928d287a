#pragma once

#include <string>
#include <vector>

#include "aldlf/afw.hpp"

namespace aldlf {

// One letter of a strategy word: the moves a memoryless strategy prescribes
// at one input position, as (from, direction, to) triples.
struct StrategyTriple {
  int from = 0;
  int dir = 0;
  int to = 0;

  bool operator==(const StrategyTriple& o) const {
    return from == o.from && dir == o.dir && to == o.to;
  }
  bool operator<(const StrategyTriple& o) const {
    if (from != o.from) return from < o.from;
    if (dir != o.dir) return dir < o.dir;
    return to < o.to;
  }
};
using StrategyLetter = std::vector<StrategyTriple>;  // sorted, unique

// One letter of an annotation: (q, flag, q') records that q can leave the
// position and return to it in state q'; flag 1 iff an accepting state was
// visited on the way (q' included, q excluded).
struct AnnotationTriple {
  int from = 0;
  int flag = 0;
  int to = 0;

  bool operator==(const AnnotationTriple& o) const {
    return from == o.from && flag == o.flag && to == o.to;
  }
  bool operator<(const AnnotationTriple& o) const {
    if (from != o.from) return from < o.from;
    if (flag != o.flag) return flag < o.flag;
    return to < o.to;
  }
};
using AnnotationLetter = std::vector<AnnotationTriple>;  // sorted, unique

struct Certificate {
  std::vector<StrategyLetter> gamma;
  std::vector<AnnotationLetter> eta;
};

std::vector<int> origin_states(const StrategyLetter& letter);
bool strategy_contains(const StrategyLetter& letter, const StrategyTriple& t);
bool annotation_contains(const AnnotationLetter& letter,
                         const AnnotationTriple& t);

// The least annotation of gamma: the smallest per-position triple sets
// closed under zero-move recording, the same-position excursion rules for
// one-step and through-cycle returns in both directions, and transitivity.
// Computed as a joint worklist fixpoint over all positions.
std::vector<AnnotationLetter> annotation_closure(
    const Afw& a, const std::vector<StrategyLetter>& gamma);

struct CertCheck {
  bool ok = true;
  std::string condition;  // name of the first violated condition
  std::string detail;

  explicit operator bool() const { return ok; }
};

// Checks that (gamma, eta) certifies acceptance of w: gamma respects the
// boundary rules and the transition function, every move lands on a state
// that is either scheduled at the target position or immediately accepting
// there, eta is closed under the excursion rules, and eta has no
// non-accepting self-cycle. Returns the first violated condition by name.
CertCheck verify_certificate(const Afw& a, const Trace& w,
                             const std::vector<StrategyLetter>& gamma,
                             const std::vector<AnnotationLetter>& eta);

}  // namespace aldlf
