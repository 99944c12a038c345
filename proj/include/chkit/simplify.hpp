#pragma once

#include "chkit/diagram.hpp"
#include "chkit/verdict.hpp"

namespace chkit {

inline constexpr int kDefaultBudget = 100000;  // diagram states

struct SimplifyResult {
  Diagram diagram;   // best (fewest crossings) found, canonical
  int states = 0;
  bool crossingless = false;
};

// Reidemeister simplification: greedy crossing-decreasing passes plus a
// bounded best-first search through non-decreasing moves.
SimplifyResult simplify_classical(const Diagram& link, int budget = kDefaultBudget);

// Yes iff reduction reaches a crossingless diagram; No via a certificate
// invariant (linking number, or an elementary-ideal obstruction); verdicts
// are monotone in the budget (Unknown may upgrade, Yes/No never flip).
Tri is_trivial_link(const Diagram& link, int budget = kDefaultBudget);

// Both resolutions trivial.
Tri is_admissible(const Diagram& d, int budget = kDefaultBudget);

// Sum of signs over crossings joining distinct components, halved; needs a
// classical diagram.  Used as a triviality obstruction.
int total_linking_obstruction(const Diagram& link);

}  // namespace chkit
