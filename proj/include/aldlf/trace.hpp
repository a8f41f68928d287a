#pragma once

#include <string>
#include <vector>

#include "aldlf/prop.hpp"

namespace aldlf {

// A nonempty finite sequence of interpretations.
class Trace {
public:
  explicit Trace(std::vector<Interp> instants);

  int length() const { return static_cast<int>(instants_.size()); }
  const Interp& at(int i) const;
  const std::vector<Interp>& instants() const { return instants_; }

  bool operator==(const Trace& o) const { return instants_ == o.instants_; }

  std::string str() const;

private:
  std::vector<Interp> instants_;
};

// Trace file format: one instant per line, atoms whitespace-separated, `-`
// for the empty interpretation, `#` starts a comment. Rejects empty traces
// and malformed atom names.
Trace parse_trace(const std::string& text);

std::string format_trace(const Trace& t);

}  // namespace aldlf
