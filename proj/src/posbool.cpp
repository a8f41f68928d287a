#include "aldlf/posbool.hpp"

#include <algorithm>

namespace aldlf {

PosBool::PosBool(Kind kind, Move move, PosBoolPtr lhs, PosBoolPtr rhs)
    : kind_(kind), move_(move), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

PosBoolPtr PosBool::truth(bool value) {
  static const PosBoolPtr t(new PosBool(Kind::True, Move{}, nullptr, nullptr));
  static const PosBoolPtr f(
      new PosBool(Kind::False, Move{}, nullptr, nullptr));
  return value ? t : f;
}

PosBoolPtr PosBool::atom(Move m) {
  return PosBoolPtr(new PosBool(Kind::Atom, m, nullptr, nullptr));
}

PosBoolPtr PosBool::conj(PosBoolPtr a, PosBoolPtr b) {
  return PosBoolPtr(
      new PosBool(Kind::And, Move{}, std::move(a), std::move(b)));
}

PosBoolPtr PosBool::disj(PosBoolPtr a, PosBoolPtr b) {
  return PosBoolPtr(new PosBool(Kind::Or, Move{}, std::move(a), std::move(b)));
}

PosBoolPtr PosBool::disj_of(const std::vector<PosBoolPtr>& parts) {
  if (parts.empty()) return truth(false);
  PosBoolPtr acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
    acc = disj(*it, acc);
  return acc;
}

PosBoolPtr PosBool::conj_of(const std::vector<PosBoolPtr>& parts) {
  if (parts.empty()) return truth(true);
  PosBoolPtr acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
    acc = conj(*it, acc);
  return acc;
}

bool satisfies(const MoveSet& moves, const PosBool& b) {
  switch (b.kind()) {
    case PosBool::Kind::True:
      return true;
    case PosBool::Kind::False:
      return false;
    case PosBool::Kind::Atom:
      return std::binary_search(moves.begin(), moves.end(), b.move());
    case PosBool::Kind::And:
      return satisfies(moves, *b.lhs()) && satisfies(moves, *b.rhs());
    case PosBool::Kind::Or:
      return satisfies(moves, *b.lhs()) || satisfies(moves, *b.rhs());
  }
  return false;
}

namespace {

// Removes duplicates and supersets: positive formulas are monotone, so only
// the minimal satisfying sets matter. Sorting by size first means every
// potential subset precedes its supersets, so one pass suffices.
void absorb(std::vector<MoveSet>& models) {
  std::sort(models.begin(), models.end(), [](const MoveSet& a, const MoveSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  models.erase(std::unique(models.begin(), models.end()), models.end());
  std::vector<MoveSet> kept;
  for (const auto& m : models) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (std::includes(m.begin(), m.end(), k.begin(), k.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }
  models = std::move(kept);
}

std::vector<MoveSet> dnf(const PosBoolPtr& b) {
  switch (b->kind()) {
    case PosBool::Kind::True:
      return {MoveSet{}};
    case PosBool::Kind::False:
      return {};
    case PosBool::Kind::Atom:
      return {MoveSet{b->move()}};
    case PosBool::Kind::Or: {
      std::vector<MoveSet> out = dnf(b->lhs());
      std::vector<MoveSet> r = dnf(b->rhs());
      out.insert(out.end(), r.begin(), r.end());
      absorb(out);
      return out;
    }
    case PosBool::Kind::And: {
      std::vector<MoveSet> l = dnf(b->lhs());
      std::vector<MoveSet> r = dnf(b->rhs());
      std::vector<MoveSet> out;
      out.reserve(l.size() * r.size());
      for (const auto& a : l)
        for (const auto& c : r) {
          MoveSet m;
          m.reserve(a.size() + c.size());
          std::set_union(a.begin(), a.end(), c.begin(), c.end(),
                         std::back_inserter(m));
          out.push_back(std::move(m));
        }
      absorb(out);
      return out;
    }
  }
  return {};
}

}  // namespace

std::vector<MoveSet> minimal_models(const PosBoolPtr& b) { return dnf(b); }

std::string posbool_to_string(const PosBoolPtr& b,
                              const std::vector<std::string>& state_names) {
  switch (b->kind()) {
    case PosBool::Kind::True:
      return "true";
    case PosBool::Kind::False:
      return "false";
    case PosBool::Kind::Atom: {
      std::string state =
          b->move().state >= 0 &&
                  b->move().state < static_cast<int>(state_names.size())
              ? state_names[b->move().state]
              : "#" + std::to_string(b->move().state);
      const char* dir = b->move().dir < 0 ? "-1" : (b->move().dir > 0 ? "+1" : "0");
      return "(" + state + "," + dir + ")";
    }
    case PosBool::Kind::And:
      return "(" + posbool_to_string(b->lhs(), state_names) + " & " +
             posbool_to_string(b->rhs(), state_names) + ")";
    case PosBool::Kind::Or:
      return "(" + posbool_to_string(b->lhs(), state_names) + " | " +
             posbool_to_string(b->rhs(), state_names) + ")";
  }
  return "?";
}

}  // namespace aldlf
