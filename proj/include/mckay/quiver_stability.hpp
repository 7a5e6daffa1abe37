#pragma once

// McKay quivers of abelian groups, subrepresentations of torus-fixed
// constellations, chamber presentations of fans and stability parameters
// with symbolic infinitesimals.

#include <cstdint>
#include <vector>

#include "mckay/constellations.hpp"
#include "mckay/exec.hpp"
#include "mckay/hilb_fan.hpp"
#include "mckay/iterated_fan.hpp"

namespace mckay {

struct McKayArrow {
  int source = 0;
  int target = 0;
  int k = 0;  // the arrow multiplies by x_k
};

struct McKayQuiver {
  AbelianAction group;
  int vertices = 1;
  std::vector<McKayArrow> arrows;  // ordered by (source, k)
};

McKayQuiver mckay_quiver_abelian(const AbelianAction& G);

// A set of characters as a bitmask over character indices.
using CharMask = std::uint64_t;
std::vector<int> mask_members(CharMask m);

inline constexpr int kClosedSubsetGuard = 24;

// Nonempty proper subsets of characters closed under the skeleton arrows of
// the constellation, i.e. the torus-fixed subrepresentations.  Sorted.
// Throws InputError when |G| exceeds `guard`.
std::vector<CharMask> closed_subsets(const MonomialSet& M, int guard = kClosedSubsetGuard);
std::vector<CharMask> closed_subsets(const AbelianAction& G, const Simplex& s,
                                     int guard = kClosedSubsetGuard);

struct ChamberPresentation {
  AbelianAction group;
  std::vector<CharMask> subsets;  // sorted, unique: theta(S) > 0 for each
  std::vector<int> source_chart;  // first chart (index into the fan) producing each subset
};

// Union of the closed subsets of every chart, using the constellation attached
// to the chart when present and chart_monomials otherwise.
ChamberPresentation chamber_inequalities(const Fan& fan, Exec exec = Exec::parallel,
                                         int guard = kClosedSubsetGuard);

// base + eps_1 * a_1 + eps_2 * a_2 + ... with 1 >> eps_1 >> eps_2 >> ... > 0.
class LexRational {
 public:
  LexRational() = default;
  explicit LexRational(std::vector<Rational> levels) : levels_(std::move(levels)) {}

  const std::vector<Rational>& levels() const { return levels_; }
  Rational level(std::size_t i) const { return i < levels_.size() ? levels_[i] : Rational(0); }
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  LexRational& operator+=(const LexRational& o);
  friend LexRational operator+(LexRational a, const LexRational& b) { return a += b; }
  friend LexRational operator*(Int k, const LexRational& a);
  friend bool operator==(const LexRational& a, const LexRational& b) { return (a + (-1) * b).is_zero(); }
  friend bool operator<(const LexRational& a, const LexRational& b) { return (b + (-1) * a).sign() > 0; }

 private:
  std::vector<Rational> levels_;
};

std::string lex_str(const LexRational& x, const char* eps = "e");

// One entry per irreducible representation with its dimension.  For abelian
// groups entries are indexed by character and every dimension is 1.
struct StabilityVector {
  std::vector<LexRational> entries;
  std::vector<Int> dims;

  // theta(R_G) = sum_i dims[i] * entries[i].
  LexRational regular_value() const;
  // theta(S) for a set of characters (abelian case).
  LexRational value(CharMask S) const;
};

// Characters of big trivial on small, as sorted big-character indices.
// Position i is the i-th character of the quotient big/small; position 0 is
// the trivial character.
std::vector<int> quotient_characters(const AbelianAction& big, const AbelianAction& small);

// Nested theta of a chain G = N_0 > N_1 > ... > N_k.  levels[0] is a theta for
// N_k indexed by N_k characters; levels[i] (i >= 1) is a theta for the
// quotient N_{k-i} / N_{k-i+1} indexed as in quotient_characters.  Level i of
// the result carries eps_i.  Each level must be 0-generated (positive on
// nontrivial characters, summing to zero); otherwise InputError.
StabilityVector theta_construct(const NormalChain& chain,
                                const std::vector<std::vector<Rational>>& levels);

// Every nonzero proper sub-dimension vector e <= dims has theta.e != 0.
// Throws InputError when the number of sub-dimension vectors exceeds 2^30.
bool is_generic(const StabilityVector& theta, Exec exec = Exec::parallel);

bool theta_in_chamber(const StabilityVector& theta, const ChamberPresentation& chamber);
bool theta_in_chamber(const StabilityVector& theta, const Fan& fan, Exec exec = Exec::parallel);

// Labels of the characters of S, e.g. "{0,2,5}" for labels of the first
// generator.
std::string mask_str(const AbelianAction& G, CharMask S);

}  // namespace mckay
