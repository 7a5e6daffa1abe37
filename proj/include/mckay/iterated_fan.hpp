#pragma once

// Fans of iterated Hilbert schemes  G/N_1-Hilb(N_1/N_2-Hilb(... N_k-Hilb)).
// The innermost group is resolved by its G-Hilb fan; each later step
// re-triangulates every chart by the G-Hilb fan of the quotient action on the
// chart coordinates, mapped back to the junior simplex.

#include <vector>

#include "mckay/exec.hpp"
#include "mckay/hilb_fan.hpp"

namespace mckay {

struct NormalChain {
  // groups[0] = G, then N_1, N_2, ...; each contained in the previous one.
  std::vector<AbelianAction> groups;

  // Throws InputError if the chain is empty, mixes dimensions or some N_i is
  // not a subgroup of N_{i-1} (checked on elements).
  static NormalChain make(std::vector<AbelianAction> groups);
  int length() const { return static_cast<int>(groups.size()); }
};

// Action of big/small on the coordinates of a chart of a small-fan.  Returns
// the quotient as a diagonal group acting on (coords[0], coords[1], coords[2]).
// Throws InputError if a chart coordinate is not small-invariant.
AbelianAction quotient_action_on_chart(const AbelianAction& big, const AbelianAction& small,
                                       const Chart& chart);

struct ChainStep {
  int step = 1;          // 1 = innermost G-Hilb
  AbelianAction group;   // the group resolved at this step
  Fan fan;               // triangles carry their step tag and Omega*Gamma constellation
};

// One entry per chain member, innermost first.  Every step fan is checked
// for crepancy.
std::vector<ChainStep> iterated_fan_steps(const NormalChain& chain, Exec exec = Exec::parallel);

// Final fan of the chain with triangle step tags and edge_steps filled in:
// the step of an edge is the first step whose fan has an edge containing it
// (pieces of a subdivided edge keep the step of the original edge).
Fan iterated_fan(const NormalChain& chain, Exec exec = Exec::parallel);

}  // namespace mckay
