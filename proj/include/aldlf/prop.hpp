#pragma once

#include <memory>
#include <string>
#include <vector>

namespace aldlf {

// A propositional interpretation: the set of atoms that hold at one instant.
// Stored sorted and deduplicated so interpretations compare and hash cheaply.
class Interp {
public:
  Interp() = default;
  explicit Interp(std::vector<std::string> atoms);

  bool contains(const std::string& atom) const;
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  bool operator==(const Interp& o) const { return atoms_ == o.atoms_; }
  bool operator!=(const Interp& o) const { return !(*this == o); }
  bool operator<(const Interp& o) const { return atoms_ < o.atoms_; }

  std::string str() const;

private:
  std::vector<std::string> atoms_;  // sorted, unique
};

class Prop;
using PropPtr = std::shared_ptr<const Prop>;

// Propositional formulas. Immutable trees; hashes are precomputed at
// construction so formulas can live in hashed containers.
class Prop {
public:
  enum class Kind { True, False, Atom, Not, And, Or };

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const PropPtr& lhs() const { return lhs_; }
  const PropPtr& rhs() const { return rhs_; }
  std::size_t hash() const { return hash_; }

  static PropPtr truth(bool value);
  static PropPtr atom(std::string name);
  static PropPtr negation(PropPtr p);
  static PropPtr conj(PropPtr a, PropPtr b);
  static PropPtr disj(PropPtr a, PropPtr b);

private:
  Prop(Kind kind, std::string name, PropPtr lhs, PropPtr rhs);

  Kind kind_;
  std::string name_;
  PropPtr lhs_, rhs_;
  std::size_t hash_;
};

// Total structural order (negative/zero/positive like strcmp).
int compare(const Prop& a, const Prop& b);
bool equal(const PropPtr& a, const PropPtr& b);

// Satisfaction of a propositional formula in one interpretation.
bool eval_prop(const Prop& p, const Interp& interp);
bool eval_prop(const PropPtr& p, const Interp& interp);

// Negation normal form of a propositional formula; negations end up on atoms.
PropPtr prop_nnf(const PropPtr& p);
// NNF of the negation.
PropPtr prop_nnf_neg(const PropPtr& p);
bool prop_is_nnf(const PropPtr& p);

// Size by the formula-size recursion: atoms and constants count 1,
// connectives add 3.
long prop_size(const PropPtr& p);

// Collects atom names into `out` (unsorted, possibly duplicated).
void prop_atoms(const PropPtr& p, std::vector<std::string>& out);

std::string prop_to_string(const PropPtr& p);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace aldlf
