#include "aldlf/semipath.hpp"

#include <algorithm>
#include <stdexcept>

namespace aldlf {

namespace {

std::string elem_str(const Afw& a, const SemiPathElem& e) {
  auto name = [&](int q) {
    return q >= 0 && q < a.num_states() ? a.state_names[q]
                                        : "#" + std::to_string(q);
  };
  if (!e.is_cycle)
    return "(" + std::to_string(e.index) + "," + name(e.q1) + ")";
  return "(" + std::to_string(e.index) + "," + name(e.q1) + "," +
         std::to_string(e.flag) + "," + name(e.q2) + ")";
}

bool gamma_has(const std::vector<StrategyLetter>& gamma, int u, int from,
               int dir, int to) {
  if (u < 0 || u >= static_cast<int>(gamma.size())) return false;
  return strategy_contains(gamma[u], StrategyTriple{from, dir, to});
}

// Adjacency: some gamma move at the first element's index connects its exit
// state to the next element's entry state, and the indices differ by the
// move's direction.
bool adjacent_ok(const std::vector<StrategyLetter>& gamma,
                 const SemiPathElem& a, const SemiPathElem& b) {
  int d = b.index - a.index;
  if (d < -1 || d > 1) return false;
  return gamma_has(gamma, a.index, a.exit(), d, b.entry());
}

}  // namespace

std::optional<std::string> validate_semipath(
    const Afw& a, const std::vector<StrategyLetter>& gamma,
    const std::vector<AnnotationLetter>& eta, const SemiPath& p) {
  if (gamma.size() != eta.size())
    return "strategy word and annotation have different lengths";
  int len = static_cast<int>(gamma.size());
  if (p.empty()) return "semi-path is empty";
  for (const auto& e : p) {
    if (e.index < 0 || e.index >= len)
      return "element " + elem_str(a, e) + " indexes outside the word";
    if (e.is_cycle &&
        !annotation_contains(eta[e.index],
                             AnnotationTriple{e.q1, e.flag, e.q2}))
      return "cycle " + elem_str(a, e) + " is not in the annotation";
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!adjacent_ok(gamma, p[i], p[i + 1]))
      return "no strategy move connects " + elem_str(a, p[i]) + " to " +
             elem_str(a, p[i + 1]);
  return std::nullopt;
}

bool semipath_is_accepting(const Afw& a, const SemiPath& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& e = p[i];
    if (e.is_cycle) {
      if (e.flag == 1 || a.is_final(e.q2)) return true;
      // Entering an accepting state through the cycle's entry counts too,
      // except at the very first element whose entry is the anchor.
      if (i > 0 && a.is_final(e.q1)) return true;
    } else {
      if (i > 0 && a.is_final(e.q1)) return true;
    }
  }
  return false;
}

bool is_jq_semipath(const SemiPath& p, int j, int q) {
  if (p.empty()) return false;
  if (p.size() == 1)
    return p[0].is_cycle && p[0].index == j && p[0].q1 == q && p[0].q2 == q;
  const auto& first = p.front();
  const auto& last = p.back();
  return first.index == j && last.index == j && first.entry() == q &&
         last.exit() == q;
}

SemiPath shorten_semipath(const Afw& a,
                          const std::vector<StrategyLetter>& gamma,
                          const std::vector<AnnotationLetter>& eta,
                          const SemiPath& p) {
  if (p.size() < 2)
    throw std::invalid_argument("shorten_semipath needs length > 1");
  if (auto why = validate_semipath(a, gamma, eta, p))
    throw std::invalid_argument("shorten_semipath: invalid semi-path: " +
                                *why);
  if (semipath_is_accepting(a, p))
    throw std::invalid_argument("shorten_semipath: semi-path is accepting");
  if (!is_jq_semipath(p, p.front().index, p.front().entry()))
    throw std::invalid_argument(
        "shorten_semipath: endpoints do not anchor a (j,q)-semi-path");

  // Two adjacent elements at the same index fold into one annotation cycle:
  // the connecting move is a zero move, so the merged excursion is itself a
  // recorded cycle. Shortens by exactly one element.
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i].index != p[i + 1].index) continue;
    SemiPath out(p.begin(), p.begin() + static_cast<long>(i));
    out.push_back(
        SemiPathElem::cycle(p[i].index, p[i].entry(), 0, p[i + 1].exit()));
    out.insert(out.end(), p.begin() + static_cast<long>(i) + 2, p.end());
    return out;
  }

  // Otherwise all adjacent indices differ by one. Fold the extremal element
  // and both neighbours into a single cycle one level down (or up, when the
  // path never rises above its anchor). Shortens by two elements; a pure
  // zigzag has no same-parity shorter form, so one element cannot be shed.
  int anchor = p.front().index;
  int extreme = anchor;
  bool peak = false;
  for (const auto& e : p) extreme = std::max(extreme, e.index);
  if (extreme > anchor) {
    peak = true;
  } else {
    extreme = anchor;
    for (const auto& e : p) extreme = std::min(extreme, e.index);
  }
  std::size_t pos = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i].index == extreme) pos = i;  // maximal position
  if (pos == 0 || pos + 1 >= p.size())
    throw std::logic_error("extremal element has no neighbours");

  int home = peak ? extreme - 1 : extreme + 1;
  SemiPath out(p.begin(), p.begin() + static_cast<long>(pos) - 1);
  out.push_back(
      SemiPathElem::cycle(home, p[pos - 1].entry(), 0, p[pos + 1].exit()));
  out.insert(out.end(), p.begin() + static_cast<long>(pos) + 2, p.end());
  return out;
}

}  // namespace aldlf
