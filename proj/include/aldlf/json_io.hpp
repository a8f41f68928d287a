#pragma once

#include <string>

#include "aldlf/certificates.hpp"
#include "aldlf/trace.hpp"

namespace aldlf {

// Structured (JSON) and dot dumps for the CLI, plus the certificate
// exchange format used for offline verification.

// Tabulating delta enumerates the 2^|atoms| letters; refuse beyond this.
constexpr int kMaxTabulatedAtoms = 6;

std::string afw_to_json(const Afw& a);
std::string afw_to_dot(const Afw& a);

std::string trace_to_json(const Trace& t);

std::string certificate_to_json(const Afw& a, const Certificate& c);
Certificate certificate_from_json(const Afw& a, const std::string& text);

}  // namespace aldlf
