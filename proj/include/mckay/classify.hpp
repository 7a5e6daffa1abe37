#pragma once

// When is G/N-Hilb(N-Hilb) isomorphic to G-Hilb?  Closed-form predicates for
// abelian G, and the fan / staircase oracles they are checked against.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/iterated_fan.hpp"

namespace mckay {

enum class IsoCase { none, case1_zmzm, case2_unique_resolution, case3_a2_mod_4r, case4_composite };
std::string to_string(IsoCase c);

struct IsoVerdict {
  bool moduli_iso = false;
  bool variety_iso = false;
  IsoCase matched_case = IsoCase::none;
  std::optional<bool> oracle_agreement;  // set when the oracles were run
  std::optional<bool> moduli_oracle;
  std::optional<bool> variety_oracle;
};

struct QuotientType {
  Int order = 1;
  Int exponent = 1;
};
QuotientType quotient_type(const AbelianAction& G, const AbelianAction& N);
// G/N is Z/m x Z/m for some m > 1.
bool quotient_is_zm_zm(const AbelianAction& G, const AbelianAction& N);

// Subgroups of G (including {1} and G), sorted by order then elements.
std::vector<AbelianAction> subgroups(const AbelianAction& G);

// Abelian G in SL(3) with |G| <= max_order, one per coordinate-permutation class.
std::vector<AbelianAction> abelian_sl3_groups(Int max_order);

// Pairs (G, N) with N a proper nontrivial subgroup, one per permutation class
// of the pair.
std::vector<std::pair<AbelianAction, AbelianAction>> abelian_sl3_pairs(Int max_order);

// Small cyclic G = 1/n(1,a) in GL(2) with n <= max_order and all proper
// nontrivial subgroups N, one per permutation class of the pair.
std::vector<std::pair<AbelianAction, AbelianAction>> cyclic_pairs_2d(Int max_order);

// G = 1/2r(1,1,2r-2), N = 1/2(1,1,0) up to permutation.  Throws InputError
// unless G is a 3-dimensional SL group and N a proper nontrivial subgroup.
bool moduli_iso_predicate_3d(const AbelianAction& G, const AbelianAction& N);

// G = 1/rs(1,1), N = 1/s(1,1).  Always false for G in SL(2).  Throws
// InputError unless G is small cyclic in dimension 2 and N proper nontrivial.
bool moduli_iso_predicate_2d(const AbelianAction& G, const AbelianAction& N);

// G unique-resolution form 1/r(1,1,r-2) or 1/r(1,r-1,0).
bool case2_form(const AbelianAction& G);
// The a of G = 1/2r(1,a,2r-a-1) with gcd(2r,a) = 1, a^2 = 1 (mod 4r) and
// N = 1/2(1,1,0), if any.
std::optional<Int> case3_parameter(const AbelianAction& G, const AbelianAction& N);

IsoVerdict variety_iso_predicate(const AbelianAction& G, const AbelianAction& N);

// Every chart of the iterated fan has a staircase constellation.
bool moduli_iso_oracle(const NormalChain& chain, Exec exec = Exec::parallel);
// g_hilb_fan(G) and iterated_fan(G > N) have the same triangles.
bool variety_iso_oracle(const AbelianAction& G, const AbelianAction& N, Exec exec = Exec::parallel);

// Predicates, optionally cross-checked against both oracles.  In dimension 2
// only the moduli statement is classified and variety_iso mirrors it.
IsoVerdict classify_pair(const AbelianAction& G, const AbelianAction& N, bool run_oracles,
                         Exec exec = Exec::parallel);

// Hirzebruch-Jung continued fraction of 2r/a reads the same backwards.
bool palindromic_continued_fraction(Int n, Int a);

}  // namespace mckay
