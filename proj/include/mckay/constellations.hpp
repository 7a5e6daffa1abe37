#pragma once

// Torus-fixed G-constellations of a chart: one Laurent monomial per
// character, stored as exponent vectors indexed by character.

#include <optional>
#include <string>
#include <vector>

#include "mckay/lattice_core.hpp"

namespace mckay {

struct MonomialSet {
  AbelianAction group;
  Simplex simplex;
  std::vector<Vec> mono;  // mono[c] has character c

  const Vec& at(int c) const { return mono.at(static_cast<std::size_t>(c)); }
  std::size_t size() const { return mono.size(); }
  // The monomials as a sorted list, for set comparisons.
  std::vector<Vec> sorted() const;
  // Rendered as reduced Laurent fractions, ordered by character.
  std::vector<std::string> rendered() const;
};

// The unique monomial of each character whose pairing with every vertex of
// the simplex lies in [0,1).
MonomialSet chart_monomials(const AbelianAction& G, const Simplex& s);

// The G-graph of the chart, if the chart's torus-fixed point is a G-cluster:
// for each character the honest monomial of least degree with respect to the
// weights sum_j v_j.  Empty when that minimum is not attained uniquely, or
// when some arrow x_k * lambda_c / lambda_{c + wt(x_k)} is not regular on the
// chart.  Whenever chart_monomials is a staircase it equals this set.
std::optional<MonomialSet> g_graph(const AbelianAction& G, const Simplex& s);

// Omega * Gamma.  `gamma` is the N-constellation of the parent chart,
// `omega` a constellation of the quotient action written in the parent's
// chart coordinates, `parent` the chart itself and `target` the simplex of
// the resulting G-chart.  Throws InputError when two products share a
// character.
MonomialSet building_block_product(const AbelianAction& G, const MonomialSet& gamma,
                                   const MonomialSet& omega, const Chart& parent,
                                   const Simplex& target);

// Non-negative and closed under division by the coordinates.
bool is_staircase(const MonomialSet& M);
// Every arrow value is regular on the chart (all vertex pairings >= 0).
bool arrows_regular(const MonomialSet& M);

struct Arrow {
  int source = 0;
  int k = 0;  // coordinate index: the arrow multiplies by x_k
  bool operator<(const Arrow& o) const {
    return source != o.source ? source < o.source : k < o.k;
  }
  bool operator==(const Arrow& o) const { return source == o.source && k == o.k; }
};

// Value of arrow (c, k): lambda_c * x_k / lambda_{c + wt(x_k)}.
Vec arrow_value(const MonomialSet& M, const Arrow& a);

// Arrows whose value is exactly 1, ordered by (source, k).
std::vector<Arrow> skeleton(const MonomialSet& M);

struct ArrowValue {
  Arrow arrow;
  Vec value;
};
// Values of the non-unit arrows, ordered by (source, k).
std::vector<ArrowValue> local_coordinates(const MonomialSet& M);

}  // namespace mckay
