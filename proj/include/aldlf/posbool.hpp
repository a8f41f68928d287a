#pragma once

#include <memory>
#include <string>
#include <vector>

namespace aldlf {

// A (state, direction) atom of an alternating transition formula: move the
// read head by `dir` and continue in `state`.
struct Move {
  int state = 0;
  int dir = 0;  // -1, 0, +1

  bool operator==(const Move& o) const {
    return state == o.state && dir == o.dir;
  }
  bool operator<(const Move& o) const {
    return state != o.state ? state < o.state : dir < o.dir;
  }
};

class PosBool;
using PosBoolPtr = std::shared_ptr<const PosBool>;

// Positive Boolean formulas over moves: no negation, so satisfaction is
// monotone and every satisfiable formula has subset-minimal models.
class PosBool {
public:
  enum class Kind { True, False, Atom, And, Or };

  Kind kind() const { return kind_; }
  const Move& move() const { return move_; }
  const PosBoolPtr& lhs() const { return lhs_; }
  const PosBoolPtr& rhs() const { return rhs_; }

  static PosBoolPtr truth(bool value);
  static PosBoolPtr atom(Move m);
  static PosBoolPtr atom(int state, int dir) { return atom(Move{state, dir}); }
  static PosBoolPtr conj(PosBoolPtr a, PosBoolPtr b);
  static PosBoolPtr disj(PosBoolPtr a, PosBoolPtr b);
  // Right folds; empty disjunction is false, empty conjunction is true.
  static PosBoolPtr disj_of(const std::vector<PosBoolPtr>& parts);
  static PosBoolPtr conj_of(const std::vector<PosBoolPtr>& parts);

private:
  PosBool(Kind kind, Move move, PosBoolPtr lhs, PosBoolPtr rhs);

  Kind kind_;
  Move move_;
  PosBoolPtr lhs_, rhs_;
};

// A set of moves, sorted and unique.
using MoveSet = std::vector<Move>;

bool satisfies(const MoveSet& moves, const PosBool& b);

// The subset-minimal satisfying move sets, each sorted, the collection
// sorted and free of supersets. Empty collection means the formula is
// unsatisfiable (false); the collection {{}} means it is valid (true).
std::vector<MoveSet> minimal_models(const PosBoolPtr& b);

inline bool is_always_true(const std::vector<MoveSet>& models) {
  return models.size() == 1 && models.front().empty();
}

std::string posbool_to_string(const PosBoolPtr& b,
                              const std::vector<std::string>& state_names);

}  // namespace aldlf
