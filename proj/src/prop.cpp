#include "aldlf/prop.hpp"

#include <algorithm>
#include <stdexcept>

namespace aldlf {

Interp::Interp(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool Interp::contains(const std::string& atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

std::string Interp::str() const {
  if (atoms_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += ' ';
    out += atoms_[i];
  }
  return out;
}

Prop::Prop(Kind kind, std::string name, PropPtr lhs, PropPtr rhs)
    : kind_(kind), name_(std::move(name)), lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {
  std::size_t h = static_cast<std::size_t>(kind_) + 0x51;
  h = hash_combine(h, std::hash<std::string>{}(name_));
  if (lhs_) h = hash_combine(h, lhs_->hash());
  if (rhs_) h = hash_combine(h, rhs_->hash());
  hash_ = h;
}

PropPtr Prop::truth(bool value) {
  static const PropPtr t(new Prop(Kind::True, "", nullptr, nullptr));
  static const PropPtr f(new Prop(Kind::False, "", nullptr, nullptr));
  return value ? t : f;
}

PropPtr Prop::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  return PropPtr(new Prop(Kind::Atom, std::move(name), nullptr, nullptr));
}

PropPtr Prop::negation(PropPtr p) {
  return PropPtr(new Prop(Kind::Not, "", std::move(p), nullptr));
}

PropPtr Prop::conj(PropPtr a, PropPtr b) {
  return PropPtr(new Prop(Kind::And, "", std::move(a), std::move(b)));
}

PropPtr Prop::disj(PropPtr a, PropPtr b) {
  return PropPtr(new Prop(Kind::Or, "", std::move(a), std::move(b)));
}

int compare(const Prop& a, const Prop& b) {
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Prop::Kind::True:
    case Prop::Kind::False:
      return 0;
    case Prop::Kind::Atom:
      return a.name().compare(b.name());
    case Prop::Kind::Not:
      return compare(*a.lhs(), *b.lhs());
    case Prop::Kind::And:
    case Prop::Kind::Or: {
      int c = compare(*a.lhs(), *b.lhs());
      return c != 0 ? c : compare(*a.rhs(), *b.rhs());
    }
  }
  return 0;
}

bool equal(const PropPtr& a, const PropPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash()) return false;
  return compare(*a, *b) == 0;
}

bool eval_prop(const Prop& p, const Interp& interp) {
  switch (p.kind()) {
    case Prop::Kind::True:
      return true;
    case Prop::Kind::False:
      return false;
    case Prop::Kind::Atom:
      return interp.contains(p.name());
    case Prop::Kind::Not:
      return !eval_prop(*p.lhs(), interp);
    case Prop::Kind::And:
      return eval_prop(*p.lhs(), interp) && eval_prop(*p.rhs(), interp);
    case Prop::Kind::Or:
      return eval_prop(*p.lhs(), interp) || eval_prop(*p.rhs(), interp);
  }
  return false;
}

bool eval_prop(const PropPtr& p, const Interp& interp) {
  return eval_prop(*p, interp);
}

PropPtr prop_nnf(const PropPtr& p) {
  switch (p->kind()) {
    case Prop::Kind::True:
    case Prop::Kind::False:
    case Prop::Kind::Atom:
      return p;
    case Prop::Kind::Not:
      return prop_nnf_neg(p->lhs());
    case Prop::Kind::And: {
      PropPtr l = prop_nnf(p->lhs()), r = prop_nnf(p->rhs());
      if (l == p->lhs() && r == p->rhs()) return p;
      return Prop::conj(l, r);
    }
    case Prop::Kind::Or: {
      PropPtr l = prop_nnf(p->lhs()), r = prop_nnf(p->rhs());
      if (l == p->lhs() && r == p->rhs()) return p;
      return Prop::disj(l, r);
    }
  }
  return p;
}

PropPtr prop_nnf_neg(const PropPtr& p) {
  switch (p->kind()) {
    case Prop::Kind::True:
      return Prop::truth(false);
    case Prop::Kind::False:
      return Prop::truth(true);
    case Prop::Kind::Atom:
      return Prop::negation(p);
    case Prop::Kind::Not:
      return prop_nnf(p->lhs());
    case Prop::Kind::And:
      return Prop::disj(prop_nnf_neg(p->lhs()), prop_nnf_neg(p->rhs()));
    case Prop::Kind::Or:
      return Prop::conj(prop_nnf_neg(p->lhs()), prop_nnf_neg(p->rhs()));
  }
  return p;
}

bool prop_is_nnf(const PropPtr& p) {
  switch (p->kind()) {
    case Prop::Kind::True:
    case Prop::Kind::False:
    case Prop::Kind::Atom:
      return true;
    case Prop::Kind::Not:
      return p->lhs()->kind() == Prop::Kind::Atom;
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return prop_is_nnf(p->lhs()) && prop_is_nnf(p->rhs());
  }
  return false;
}

long prop_size(const PropPtr& p) {
  switch (p->kind()) {
    case Prop::Kind::True:
    case Prop::Kind::False:
    case Prop::Kind::Atom:
      return 1;
    case Prop::Kind::Not:
      return 3 + prop_size(p->lhs());
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return 3 + prop_size(p->lhs()) + prop_size(p->rhs());
  }
  return 1;
}

void prop_atoms(const PropPtr& p, std::vector<std::string>& out) {
  switch (p->kind()) {
    case Prop::Kind::True:
    case Prop::Kind::False:
      return;
    case Prop::Kind::Atom:
      out.push_back(p->name());
      return;
    case Prop::Kind::Not:
      prop_atoms(p->lhs(), out);
      return;
    case Prop::Kind::And:
    case Prop::Kind::Or:
      prop_atoms(p->lhs(), out);
      prop_atoms(p->rhs(), out);
      return;
  }
}

namespace {

// Precedence: | lowest, & middle, unary highest.
void print_prop(const PropPtr& p, int parent_prec, std::string& out) {
  switch (p->kind()) {
    case Prop::Kind::True:
      out += "true";
      return;
    case Prop::Kind::False:
      out += "false";
      return;
    case Prop::Kind::Atom:
      out += p->name();
      return;
    case Prop::Kind::Not:
      out += '!';
      print_prop(p->lhs(), 3, out);
      return;
    case Prop::Kind::And: {
      bool parens = parent_prec > 2;
      if (parens) out += '(';
      print_prop(p->lhs(), 2, out);
      out += " & ";
      print_prop(p->rhs(), 3, out);  // keep right-nested trees explicit
      if (parens) out += ')';
      return;
    }
    case Prop::Kind::Or: {
      bool parens = parent_prec > 1;
      if (parens) out += '(';
      print_prop(p->lhs(), 1, out);
      out += " | ";
      print_prop(p->rhs(), 2, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string prop_to_string(const PropPtr& p) {
  std::string out;
  print_prop(p, 0, out);
  return out;
}

}  // namespace aldlf
