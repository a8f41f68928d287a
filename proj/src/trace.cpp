#include "aldlf/trace.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace aldlf {

Trace::Trace(std::vector<Interp> instants) : instants_(std::move(instants)) {
  if (instants_.empty())
    throw std::invalid_argument("a trace must have at least one instant");
}

const Interp& Trace::at(int i) const {
  if (i < 0 || i >= length())
    throw std::out_of_range("trace position " + std::to_string(i) +
                            " out of range [0," + std::to_string(length()) +
                            ")");
  return instants_[static_cast<std::size_t>(i)];
}

std::string Trace::str() const { return format_trace(*this); }

namespace {

bool valid_atom_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

}  // namespace

Trace parse_trace(const std::string& text) {
  std::vector<Interp> instants;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> atoms;
    std::string tok;
    bool dash = false;
    while (ls >> tok) {
      if (tok == "-") {
        dash = true;
        continue;
      }
      if (!valid_atom_name(tok))
        throw std::invalid_argument("trace line " + std::to_string(lineno) +
                                    ": malformed atom name '" + tok + "'");
      atoms.push_back(tok);
    }
    if (dash && !atoms.empty())
      throw std::invalid_argument("trace line " + std::to_string(lineno) +
                                  ": '-' mixed with atoms");
    if (dash || !atoms.empty()) instants.emplace_back(std::move(atoms));
  }
  if (instants.empty())
    throw std::invalid_argument("empty trace: semantics need at least one instant");
  return Trace(std::move(instants));
}

std::string format_trace(const Trace& t) {
  std::string out;
  for (const auto& i : t.instants()) {
    out += i.str();
    out += '\n';
  }
  return out;
}

}  // namespace aldlf
