#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aldlf/certificates.hpp"

namespace aldlf {

// One element of a semi-path: a plain configuration (index, state) or a
// cycle (index, q1, flag, q2) taken from the annotation at that index.
struct SemiPathElem {
  int index = 0;
  bool is_cycle = false;
  int q1 = 0;
  int flag = 0;  // cycles only
  int q2 = 0;    // cycles only

  int entry() const { return q1; }
  int exit() const { return is_cycle ? q2 : q1; }

  static SemiPathElem plain(int index, int q) {
    return SemiPathElem{index, false, q, 0, 0};
  }
  static SemiPathElem cycle(int index, int q1, int flag, int q2) {
    return SemiPathElem{index, true, q1, flag, q2};
  }

  bool operator==(const SemiPathElem& o) const {
    return index == o.index && is_cycle == o.is_cycle && q1 == o.q1 &&
           (!is_cycle || (flag == o.flag && q2 == o.q2));
  }
};
using SemiPath = std::vector<SemiPathElem>;

// Empty when p satisfies the adjacency and membership conditions for
// (gamma, eta); otherwise a description of the first violation.
std::optional<std::string> validate_semipath(
    const Afw& a, const std::vector<StrategyLetter>& gamma,
    const std::vector<AnnotationLetter>& eta, const SemiPath& p);

// An element is accepting if it is a cycle with flag 1 or an accepting exit
// state, or a non-initial plain element in an accepting state.
bool semipath_is_accepting(const Afw& a, const SemiPath& p);

// Whether p starts and ends at index j in state q (entry of the first
// element, exit of the last).
bool is_jq_semipath(const SemiPath& p, int j, int q);

// Shortens a valid non-accepting (j,q)-semi-path of length > 1: two adjacent
// same-index elements are merged into one annotation cycle (length n-1);
// otherwise the extremal-index element is folded into its neighbours
// (length n-2; a pure zigzag has no same-length-parity shorter form, see the
// unit tests). The result is again a valid non-accepting (j,q)-semi-path.
SemiPath shorten_semipath(const Afw& a,
                          const std::vector<StrategyLetter>& gamma,
                          const std::vector<AnnotationLetter>& eta,
                          const SemiPath& p);

}  // namespace aldlf
