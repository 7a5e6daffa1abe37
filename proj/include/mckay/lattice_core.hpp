#pragma once

// Finite diagonal abelian group actions on C^2 or C^3, the lattices
// L = Z^n + sum Z*g and M = dual(L), characters, the junior simplex, and the
// two geometric primitives (Simplex, Chart) shared by every later module.
//
// Conventions.  A group element diag(e^{a_1},...,e^{a_n}) with e = exp(2 pi i/R)
// is stored as the integer vector (a_1,...,a_n) with entries in [0,R), where R
// is the exponent of G.  Points of L are stored as integer vectors over an
// explicit denominator.  Exponent vectors of Laurent monomials are plain
// integer vectors.  Unused coordinates in dimension 2 are always zero.

#include <array>
#include <boost/rational.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mckay {

using Int = std::int64_t;
using Vec = std::array<Int, 3>;
using Rational = boost::rational<Int>;

Int dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(Int k, const Vec& a);
Int det3(const Vec& a, const Vec& b, const Vec& c);
Vec cross(const Vec& a, const Vec& b);
Vec unit_vec(int k);

struct Generator {
  Int order = 1;
  Vec weights{0, 0, 0};
};

// A character of G together with its two external descriptions.
struct Character {
  int index = 0;               // dense index in [0, |G|)
  std::vector<Int> weights;    // <m, w_k> mod r_k for each user generator k
  Vec residue{0, 0, 0};        // canonical representative of m + M
};

class AbelianAction {
 public:
  AbelianAction();  // trivial group in dimension 3

  // Throws InputError on an SL violation or a non-small 2D generator when
  // `small` is requested.
  static AbelianAction from_generators(int dim, bool sl, std::vector<Generator> gens,
                                       bool small = false);
  // Group generated by element vectors that are already scaled to `den`.
  static AbelianAction from_scaled(int dim, Int den, const std::vector<Vec>& elements);

  int dim() const;
  bool sl() const;
  const std::vector<Generator>& generators() const;
  Int exponent() const;  // R, the lcm of the element orders
  Int order() const;
  const std::vector<Vec>& elements() const;  // sorted, scaled by exponent()
  const std::vector<Int>& invariant_factors() const;  // d_1 | d_2 | ..., all > 1
  const std::vector<Vec>& smith_generators() const;   // one per invariant factor

  // Is p/den a point of L?
  bool contains_point(const Vec& p, Int den) const;
  // Is every element of `other` an element of this group?
  bool contains_group(const AbelianAction& other) const;
  bool same_elements(const AbelianAction& other) const;

  // Characters are indexed densely.  Index 0 is always the trivial character.
  int num_chars() const { return static_cast<int>(order()); }
  int char_index(const Vec& exponent) const;
  int coordinate_char(int k) const;  // character of x_k
  int char_add(int a, int b) const;
  int char_neg(int a) const;
  Character weight_of(const Vec& exponent) const;
  Character character(int index) const;
  const Vec& char_representative(int index) const;  // a non-negative monomial
  // Value of the character on a group element: exponent of e (mod R).
  Int char_value(int index, const Vec& element) const;
  std::string char_label(int index) const;

  // Human-readable presentation, e.g. "1/6(1,2,3)" or "1/2(1,1,0)+1/2(1,0,1)".
  std::string str() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  explicit AbelianAction(std::shared_ptr<const Data> d);
};

// Exact lattice data: the columns of `basis` span L, the columns of
// `dual_basis` span M.  Only the leading dim x dim block is meaningful.
struct Lattice {
  int dim = 3;
  std::array<std::array<Rational, 3>, 3> basis{};
  std::array<std::array<Int, 3>, 3> dual_basis{};
  Rational det_basis() const;
  Int det_dual() const;
};

Lattice lattice_of(const AbelianAction& G);

// Junior simplex points scaled by `den` (= exponent of G).  The three
// vertices come first, then the remaining points in increasing lex order.
struct JuniorSimplex {
  Int den = 1;
  std::vector<Vec> points;
};

JuniorSimplex junior_points(const AbelianAction& G);

// Canonical presentation up to permutation of coordinates: among all n!
// coordinate permutations, the lexicographically smallest sorted element
// list.  Two groups are permutation-equivalent iff their forms are equal.
struct CanonicalForm {
  int dim = 3;
  Int exponent = 1;
  std::vector<Int> invariant_factors;
  std::vector<Vec> elements;
  std::array<int, 3> permutation{0, 1, 2};
  bool operator==(const CanonicalForm& o) const {
    return dim == o.dim && exponent == o.exponent && elements == o.elements;
  }
};

CanonicalForm canonical_form(const AbelianAction& G);
bool isomorphic_up_to_permutation(const AbelianAction& a, const AbelianAction& b);

// A lattice simplex in the cone R^n_{>=0}: a triangle of the junior simplex
// (dim 3) or a 2D cone given by its two rays (dim 2).  Vertices are stored
// scaled by `den` and sorted in decreasing lexicographic order.
struct Simplex {
  int dim = 3;
  Int den = 1;
  std::array<Vec, 3> v{};

  static Simplex make(int dim, Int den, std::array<Vec, 3> verts);
  Int det() const;  // determinant of the scaled vertex matrix
  // Unimodular with respect to the lattice of a group of the given order.
  bool unimodular(Int group_order) const;
  Simplex rescaled(Int new_den) const;
  bool operator<(const Simplex& o) const;
  bool operator==(const Simplex& o) const;
};
using Triangle = Simplex;

// Local toric coordinates of the chart of a unimodular simplex: the dual
// basis c_j of M with <c_j, v_k> = delta_jk.  coords[j] pairs with v[j].
struct Chart {
  Simplex simplex;
  std::array<Vec, 3> coords{};
};

Chart chart_coordinates(const Simplex& s);

// Reduced fraction rendering of a scaled point, e.g. "1/6(1,2,3)".
std::string point_str(const Vec& p, Int den, int dim = 3);
// Laurent monomial rendering in the given variable names, e.g. "z^2/x".
std::string laurent_str(const Vec& m, int dim = 3, const char* names = "xyz");

}  // namespace mckay
