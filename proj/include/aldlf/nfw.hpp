#pragma once

#include <optional>
#include <vector>

#include "aldlf/certificates.hpp"

namespace aldlf {

// One state of the nondeterministic word automaton that guesses a strategy
// word and annotation letter by letter. Control tracks whether the input
// read so far is acceptable and whether the last letter scheduled a
// rightward move; memory holds the previous input letter together with the
// guessed strategy and annotation letters, which is exactly what the
// adjacent-letter checks need.
struct NfwState {
  enum class Control { Initial, AcceptingReady, PendingRight };

  Control control = Control::Initial;
  bool first = false;       // remembered letter sits at position 0
  Interp letter;            // previous input letter
  StrategyLetter moves;     // previous strategy letter
  AnnotationLetter cycles;  // previous annotation letter

  bool operator==(const NfwState& o) const {
    return control == o.control && first == o.first && letter == o.letter &&
           moves == o.moves && cycles == o.cycles;
  }
  bool operator<(const NfwState& o) const;
};

NfwState nfw_initial();

// All consistent successor states after reading `letter`. Strategy letters
// are assembled from minimal models of delta for every scheduled origin;
// annotation letters extend the forced cycles with guessed rightward
// returns. Candidates that break a per-letter or adjacent-letter condition
// are dropped. With at_last set, letters scheduling rightward moves are
// dropped entirely.
std::vector<NfwState> nfw_successors(const Afw& a, const NfwState& s,
                                     const Interp& letter, bool at_last,
                                     DeltaCache& cache);

// Word acceptance by exhausting the successor relation over w.
bool nfw_accepts(const Afw& a, const Trace& w);

// Same decision, but returns the reconstructed certificate on acceptance.
std::optional<Certificate> nfw_accepting_certificate(const Afw& a,
                                                     const Trace& w);

}  // namespace aldlf
