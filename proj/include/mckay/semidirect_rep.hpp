#pragma once

// Irreducible representations of G = N x| H with N abelian, laid out by the
// H-orbits on Irr(N) and their stabilizers, and the stability parameter theta
// on Irr(G) built from parameters on Irr(N) and Irr(G/N) = Irr(H).

#include <string>
#include <vector>

#include "mckay/quiver_stability.hpp"

namespace mckay {

// A group from the small catalog used for H and for stabilizers.
struct HSpec {
  enum class Kind { cyclic, dihedral, klein, z3 };
  Kind kind = Kind::cyclic;
  Int m = 1;  // cyclic: order m; dihedral: order 2m; ignored otherwise

  Int order() const;
  int num_generators() const;  // cyclic / z3: a; dihedral: a (rotation), b (reflection); klein: a, b
  // Dimensions of the irreducible representations in catalog order: the
  // one-dimensional ones first (trivial first), then the two-dimensional ones.
  std::vector<Int> irr_dims() const;
  std::string str() const;
};

// Automorphisms act on elements of N = Z/d_1 x ... x Z/d_r by
// n'_i = sum_j action[i][j] * n_j mod d_i.
using IntMatrix = std::vector<std::vector<Int>>;

struct SemidirectSpec {
  std::vector<Int> N;            // invariant factors (or any cyclic orders)
  HSpec H;
  std::vector<IntMatrix> action;  // one matrix per generator of H

  Int order() const;
  int num_chars_N() const;
};

// D_2n = Z/n x| Z/2 with the reflection acting by inversion.
SemidirectSpec dihedral_spec(Int n);

struct IrrOrbit {
  std::vector<int> members;  // character indices of N, sorted; members[0] is the representative
  HSpec stabilizer;
  std::vector<Int> tau_dims;  // dimensions of Irr(stabilizer)
};

struct IrrEntry {
  int orbit = 0;
  int j = 0;
  Int dim = 1;  // orbit length * tau_dims[j]
  std::string label() const;  // "rho_i^j"
};

struct IrrLayout {
  SemidirectSpec spec;
  std::vector<IrrOrbit> orbits;  // orbit 0 is the trivial character
  std::vector<IrrEntry> irr;     // by orbit, then j
  std::vector<Int> dims() const;
};

// Character index of N for b = (b_1, ..., b_r), b_i mod d_i: mixed radix with
// b_1 most significant.
int n_char_index(const SemidirectSpec& spec, const std::vector<Int>& b);
std::vector<Int> n_char(const SemidirectSpec& spec, int index);

// H-orbits on Irr(N) with identified stabilizers.  Throws InputError if a
// matrix is not well defined modulo the d_i, the generator matrices violate
// the catalog relations, or a stabilizer is outside the catalog.
std::vector<IrrOrbit> dual_orbits(const SemidirectSpec& spec);

// Full layout; throws InvariantError if the sum of squared dimensions is not |G|.
IrrLayout irr_table(const SemidirectSpec& spec);

// theta on Irr(G).  theta_N is indexed by N characters, theta_H by Irr(H) in
// catalog order; both must be 0-generated (theta_H weighted by dimension).
// Row 0 gets dim(tau_0^j) * theta_N[0] + eps * theta_H[j]; orbit i gets
// dim(tau_i^j) times the orbit sum of theta_N.  With `require_invariant`,
// theta_N must be constant on every orbit.
StabilityVector theta_semidirect(const SemidirectSpec& spec, const std::vector<Rational>& theta_N,
                                 const std::vector<Rational>& theta_H,
                                 bool require_invariant = false);

}  // namespace mckay
