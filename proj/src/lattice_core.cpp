#include "mckay/lattice_core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

using Mat = std::array<std::array<Int, 3>, 3>;  // column-major: m[col][row]

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Vec reduce(const Vec& v, Int R) {
  return {floor_mod(v[0], R), floor_mod(v[1], R), floor_mod(v[2], R)};
}

Vec add_mod(const Vec& a, const Vec& b, Int R) { return reduce(a + b, R); }

// Lattice basis (columns) of the lattice spanned by `gens` in Z^n, which
// must have full rank n.  Euclid-style elimination one coordinate at a time;
// the result is triangular: basis[i][j] == 0 for j < i.
Mat lattice_basis(std::vector<Vec> pool, int n) {
  Mat basis{};
  for (int i = 0; i < n; ++i) {
    while (true) {
      int piv = -1;
      for (int k = 0; k < static_cast<int>(pool.size()); ++k) {
        if (pool[k][i] == 0) continue;
        if (piv < 0 || std::abs(pool[k][i]) < std::abs(pool[piv][i])) piv = k;
      }
      if (piv < 0) throw InvariantError("lattice_basis: lattice is not of full rank");
      bool clean = true;
      for (int k = 0; k < static_cast<int>(pool.size()); ++k) {
        if (k == piv || pool[k][i] == 0) continue;
        Int q = pool[k][i] / pool[piv][i];
        pool[k] = pool[k] - q * pool[piv];
        if (pool[k][i] != 0) clean = false;
      }
      if (clean) {
        basis[i] = pool[piv];
        if (basis[i][i] < 0) basis[i] = Int{-1} * basis[i];
        pool.erase(pool.begin() + piv);
        break;
      }
    }
  }
  return basis;
}

Int det_n(const Mat& m, int n) {
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[1][0] * m[0][1];
  return det3(m[0], m[1], m[2]);
}

// Adjugate of the n x n matrix whose columns are m[c]; adj * m = det * I.
// Returned in the same column-major layout.
Mat adjugate(const Mat& m, int n) {
  Mat a{};
  if (n == 1) {
    a[0][0] = 1;
  } else if (n == 2) {
    // m = [[m00 m10],[m01 m11]] in row form (rows = coordinate, cols = vector)
    a[0][0] = m[1][1];
    a[1][1] = m[0][0];
    a[1][0] = -m[1][0];
    a[0][1] = -m[0][1];
  } else {
    // rows of the inverse are the cross products of column pairs
    Vec r0 = cross(m[1], m[2]), r1 = cross(m[2], m[0]), r2 = cross(m[0], m[1]);
    for (int c = 0; c < 3; ++c) {
      a[c][0] = r0[c];
      a[c][1] = r1[c];
      a[c][2] = r2[c];
    }
  }
  return a;
}

struct SmithResult {
  std::vector<Int> factors;   // > 1, each dividing the next
  std::vector<Vec> generators;
};

// G = L_scaled / R Z^n where L_scaled is spanned by `elements` and R e_i.
SmithResult smith_decompose(const std::vector<Vec>& gens, Int R, int n) {
  std::vector<Vec> pool = gens;
  for (int i = 0; i < n; ++i) pool.push_back(R * unit_vec(i));
  Mat F = lattice_basis(pool, n);

  // A[col][row]: coordinates of R e_col in the basis F (triangular solve).
  Mat A{};
  for (int c = 0; c < n; ++c) {
    Vec rhs = R * unit_vec(c);
    Vec x{0, 0, 0};
    for (int i = 0; i < n; ++i) {
      if (rhs[i] % F[i][i] != 0) throw InvariantError("smith_decompose: non-integral solve");
      x[i] = rhs[i] / F[i][i];
      rhs = rhs - x[i] * F[i];
    }
    A[c] = x;
  }

  auto row_add = [&](int dst, int src, Int k) {  // row_dst += k row_src
    for (int c = 0; c < n; ++c) A[c][dst] += k * A[c][src];
    F[src] = F[src] - k * F[dst];
  };
  auto row_swap = [&](int i, int j) {
    for (int c = 0; c < n; ++c) std::swap(A[c][i], A[c][j]);
    std::swap(F[i], F[j]);
  };
  auto row_neg = [&](int i) {
    for (int c = 0; c < n; ++c) A[c][i] = -A[c][i];
    F[i] = Int{-1} * F[i];
  };
  auto col_add = [&](int dst, int src, Int k) {
    for (int r = 0; r < n; ++r) A[dst][r] += k * A[src][r];
  };
  auto col_swap = [&](int i, int j) { std::swap(A[i], A[j]); };

  for (int t = 0; t < n; ++t) {
    while (true) {
      int pr = -1, pc = -1;
      for (int c = t; c < n; ++c)
        for (int r = t; r < n; ++r)
          if (A[c][r] != 0 && (pr < 0 || std::abs(A[c][r]) < std::abs(A[pc][pr]))) pr = r, pc = c;
      if (pr < 0) break;
      if (pr != t) row_swap(pr, t);
      if (pc != t) col_swap(pc, t);
      bool done = true;
      for (int r = t + 1; r < n; ++r) {
        Int q = A[t][r] / A[t][t];
        if (q != 0) row_add(r, t, -q);
        if (A[t][r] != 0) done = false;
      }
      for (int c = t + 1; c < n; ++c) {
        Int q = A[c][t] / A[t][t];
        if (q != 0) col_add(c, t, -q);
        if (A[c][t] != 0) done = false;
      }
      if (done) {
        for (int c = t + 1; c < n && done; ++c)
          for (int r = t + 1; r < n && done; ++r)
            if (A[c][r] % A[t][t] != 0) {
              row_add(t, r, 1);
              done = false;
            }
      }
      if (done) break;
    }
    if (A[t][t] < 0) row_neg(t);
  }

  SmithResult out;
  for (int t = 0; t < n; ++t) {
    if (A[t][t] == 0) throw InvariantError("smith_decompose: singular relation matrix");
    if (A[t][t] == 1) continue;
    out.factors.push_back(A[t][t]);
    out.generators.push_back(reduce(F[t], R));
  }
  return out;
}

std::vector<Vec> closure(const std::vector<Vec>& gens, Int R) {
  std::vector<Vec> elems{Vec{0, 0, 0}};
  std::vector<Vec> frontier = elems;
  std::vector<Vec> seen_sorted = elems;
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& e : frontier)
      for (const Vec& g : gens) {
        Vec m = add_mod(e, g, R);
        auto it = std::lower_bound(seen_sorted.begin(), seen_sorted.end(), m);
        if (it != seen_sorted.end() && *it == m) continue;
        seen_sorted.insert(it, m);
        next.push_back(m);
      }
    frontier = std::move(next);
  }
  return seen_sorted;
}

std::array<std::array<int, 3>, 6> permutations3() {
  return {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
}

}  // namespace

Int dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec operator+(const Vec& a, const Vec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec operator-(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec operator*(Int k, const Vec& a) { return {k * a[0], k * a[1], k * a[2]}; }

Int det3(const Vec& a, const Vec& b, const Vec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec unit_vec(int k) {
  Vec v{0, 0, 0};
  v[k] = 1;
  return v;
}

// ---------------------------------------------------------------------------

struct AbelianAction::Data {
  int dim = 3;
  bool sl = true;
  std::vector<Generator> gens;
  Int R = 1;
  std::vector<Vec> elements;
  std::vector<Int> factors;
  std::vector<Vec> smith;
  std::vector<int> stride;
  std::vector<Vec> reps;
  std::array<int, 3> coord_char{0, 0, 0};
};

AbelianAction::AbelianAction() : AbelianAction(from_generators(3, true, {}).d_) {}
AbelianAction::AbelianAction(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

AbelianAction AbelianAction::from_generators(int dim, bool sl, std::vector<Generator> gens,
                                             bool small) {
  if (dim != 2 && dim != 3) throw InputError("group dimension must be 2 or 3");
  auto data = std::make_shared<Data>();
  data->dim = dim;
  data->sl = sl;
  Int R0 = 1;
  for (auto& g : gens) {
    if (g.order < 1) throw InputError("generator order must be positive");
    for (int k = dim; k < 3; ++k)
      if (g.weights[k] != 0) throw InputError("weight vector longer than the group dimension");
    g.weights = reduce(g.weights, g.order);
    if (sl && (g.weights[0] + g.weights[1] + g.weights[2]) % g.order != 0)
      throw InputError("generator " + point_str(g.weights, g.order, dim) +
                       " violates the SL condition (weights must sum to 0 mod r)");
    R0 = std::lcm(R0, g.order);
  }
  data->gens = gens;

  std::vector<Vec> scaled;
  for (const auto& g : gens) {
    Vec v = reduce((R0 / g.order) * g.weights, R0);
    if (v != Vec{0, 0, 0}) scaled.push_back(v);
  }
  auto elems = closure(scaled, R0);
  Int g = R0;
  for (const auto& e : elems)
    for (Int c : e) g = std::gcd(g, c);
  data->R = R0 / g;
  for (auto& e : elems) e = Vec{e[0] / g, e[1] / g, e[2] / g};
  for (auto& v : scaled) v = Vec{v[0] / g, v[1] / g, v[2] / g};
  std::sort(elems.begin(), elems.end());
  data->elements = elems;

  if (small) {
    for (const auto& e : elems) {
      if (e == Vec{0, 0, 0}) continue;
      for (int k = 0; k < dim; ++k)
        if (e[k] == 0)
          throw InputError("group is not small: element " + point_str(e, data->R, dim) +
                           " fixes a coordinate hyperplane");
    }
  }

  auto sm = smith_decompose(scaled, data->R, dim);
  data->factors = sm.factors;
  data->smith = sm.generators;
  Int prod = 1;
  for (Int d : data->factors) prod *= d;
  if (prod != static_cast<Int>(elems.size()))
    throw InvariantError("Smith decomposition order mismatch");
  data->stride.assign(data->factors.size(), 1);
  for (int i = static_cast<int>(data->factors.size()) - 2; i >= 0; --i)
    data->stride[i] = data->stride[i + 1] * static_cast<int>(data->factors[i + 1]);

  AbelianAction out{std::shared_ptr<const Data>(data)};
  // Representatives: breadth-first over non-negative monomials.
  data->reps.assign(elems.size(), Vec{-1, -1, -1});
  std::vector<char> found(elems.size(), 0);
  std::deque<Vec> queue{Vec{0, 0, 0}};
  std::size_t nfound = 0;
  while (!queue.empty() && nfound < elems.size()) {
    Vec m = queue.front();
    queue.pop_front();
    int c = out.char_index(m);
    if (found[c]) continue;
    found[c] = 1;
    data->reps[c] = m;
    ++nfound;
    for (int k = 0; k < dim; ++k) queue.push_back(m + unit_vec(k));
  }
  for (int k = 0; k < dim; ++k) data->coord_char[k] = out.char_index(unit_vec(k));
  return out;
}

AbelianAction AbelianAction::from_scaled(int dim, Int den, const std::vector<Vec>& elements) {
  // Keep a short generating list so that labels stay readable.
  std::vector<Generator> gens;
  std::vector<Vec> generated{Vec{0, 0, 0}};
  bool sl = true;
  for (const auto& e : elements) {
    Vec r = reduce(e, den);
    if (std::binary_search(generated.begin(), generated.end(), r)) continue;
    gens.push_back({den, r});
    if ((r[0] + r[1] + r[2]) % den != 0) sl = false;
    std::vector<Vec> sc;
    for (const auto& g : gens) sc.push_back(g.weights);
    generated = closure(sc, den);
  }
  if (gens.empty()) gens.push_back({1, {0, 0, 0}});
  return from_generators(dim, sl, gens);
}

int AbelianAction::dim() const { return d_->dim; }
bool AbelianAction::sl() const { return d_->sl; }
const std::vector<Generator>& AbelianAction::generators() const { return d_->gens; }
Int AbelianAction::exponent() const { return d_->R; }
Int AbelianAction::order() const { return static_cast<Int>(d_->elements.size()); }
const std::vector<Vec>& AbelianAction::elements() const { return d_->elements; }
const std::vector<Int>& AbelianAction::invariant_factors() const { return d_->factors; }
const std::vector<Vec>& AbelianAction::smith_generators() const { return d_->smith; }

bool AbelianAction::contains_point(const Vec& p, Int den) const {
  Vec q{0, 0, 0};
  for (int k = 0; k < 3; ++k) {
    if ((p[k] * d_->R) % den != 0) return false;
    q[k] = floor_mod(p[k] * d_->R / den, d_->R);
  }
  return std::binary_search(d_->elements.begin(), d_->elements.end(), q);
}

bool AbelianAction::contains_group(const AbelianAction& other) const {
  for (const auto& e : other.elements())
    if (!contains_point(e, other.exponent())) return false;
  return true;
}

bool AbelianAction::same_elements(const AbelianAction& other) const {
  return dim() == other.dim() && order() == other.order() && contains_group(other);
}

int AbelianAction::char_index(const Vec& m) const {
  int idx = 0;
  for (std::size_t i = 0; i < d_->factors.size(); ++i) {
    Int d = d_->factors[i];
    Int v = floor_mod(dot(m, d_->smith[i]), d_->R) / (d_->R / d);
    idx += static_cast<int>(v) * d_->stride[i];
  }
  return idx;
}

int AbelianAction::coordinate_char(int k) const { return d_->coord_char[k]; }

int AbelianAction::char_add(int a, int b) const {
  int idx = 0;
  for (std::size_t i = 0; i < d_->factors.size(); ++i) {
    int d = static_cast<int>(d_->factors[i]);
    int s = d_->stride[i];
    int va = (a / s) % d, vb = (b / s) % d;
    idx += ((va + vb) % d) * s;
  }
  return idx;
}

int AbelianAction::char_neg(int a) const {
  int idx = 0;
  for (std::size_t i = 0; i < d_->factors.size(); ++i) {
    int d = static_cast<int>(d_->factors[i]);
    int s = d_->stride[i];
    idx += ((d - (a / s) % d) % d) * s;
  }
  return idx;
}

Character AbelianAction::weight_of(const Vec& m) const {
  Character c;
  c.index = char_index(m);
  for (const auto& g : d_->gens) c.weights.push_back(floor_mod(dot(m, g.weights), g.order));
  c.residue = d_->reps[c.index];
  return c;
}

Character AbelianAction::character(int index) const { return weight_of(d_->reps.at(index)); }

const Vec& AbelianAction::char_representative(int index) const { return d_->reps.at(index); }

Int AbelianAction::char_value(int index, const Vec& element) const {
  return floor_mod(dot(d_->reps.at(index), element), d_->R);
}

std::string AbelianAction::char_label(int index) const {
  auto c = character(index);
  if (c.weights.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c.weights.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.weights[i]);
  }
  return s;
}

std::string AbelianAction::str() const {
  std::string s;
  for (const auto& g : d_->gens) {
    if (!s.empty()) s += "+";
    s += point_str(g.weights, g.order, d_->dim);
  }
  if (s.empty()) s = point_str({0, 0, 0}, 1, d_->dim);
  return s;
}

// ---------------------------------------------------------------------------

Rational Lattice::det_basis() const {
  if (dim == 2) return basis[0][0] * basis[1][1] - basis[1][0] * basis[0][1];
  Rational d = 0;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    d += basis[0][i] * (basis[1][j] * basis[2][k] - basis[1][k] * basis[2][j]);
  }
  return d;
}

Int Lattice::det_dual() const {
  Mat m{};
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) m[c][r] = dual_basis[c][r];
  return det_n(m, dim);
}

Lattice lattice_of(const AbelianAction& G) {
  const int n = G.dim();
  const Int R = G.exponent();
  std::vector<Vec> pool = G.elements();
  for (int i = 0; i < n; ++i) pool.push_back(R * unit_vec(i));
  Mat B = lattice_basis(pool, n);
  Lattice out;
  out.dim = n;
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) out.basis[c][r] = Rational(B[c][r], R);
  // M = R * B^{-T}: column c of the dual basis is row c of R * B^{-1}.
  Int d = det_n(B, n);
  Mat adj = adjugate(B, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      Int num = R * adj[r][c];
      if (num % d != 0) throw InvariantError("lattice_of: dual basis is not integral");
      out.dual_basis[c][r] = num / d;
    }
  return out;
}

JuniorSimplex junior_points(const AbelianAction& G) {
  if (G.dim() != 3) throw InputError("junior_points requires a 3-dimensional group");
  const Int R = G.exponent();
  JuniorSimplex js;
  js.den = R;
  js.points = {Vec{R, 0, 0}, Vec{0, R, 0}, Vec{0, 0, R}};
  for (const auto& e : G.elements())
    if (e[0] + e[1] + e[2] == R) js.points.push_back(e);
  std::sort(js.points.begin() + 3, js.points.end());
  return js;
}

CanonicalForm canonical_form(const AbelianAction& G) {
  CanonicalForm best;
  best.dim = G.dim();
  best.exponent = G.exponent();
  best.invariant_factors = G.invariant_factors();
  bool first = true;
  for (const auto& p : permutations3()) {
    if (G.dim() == 2 && p[2] != 2) continue;
    std::vector<Vec> el;
    el.reserve(G.elements().size());
    for (const auto& e : G.elements()) el.push_back({e[p[0]], e[p[1]], e[p[2]]});
    std::sort(el.begin(), el.end());
    if (first || el < best.elements) {
      best.elements = std::move(el);
      best.permutation = p;
      first = false;
    }
  }
  return best;
}

bool isomorphic_up_to_permutation(const AbelianAction& a, const AbelianAction& b) {
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------

Simplex Simplex::make(int dim, Int den, std::array<Vec, 3> verts) {
  Simplex s;
  s.dim = dim;
  s.den = den;
  if (dim == 2) verts[2] = Vec{0, 0, 0};
  std::sort(verts.begin(), verts.begin() + dim, std::greater<Vec>());
  s.v = verts;
  return s;
}

Int Simplex::det() const {
  if (dim == 2) return v[0][0] * v[1][1] - v[0][1] * v[1][0];
  return det3(v[0], v[1], v[2]);
}

bool Simplex::unimodular(Int group_order) const {
  Int p = 1;
  for (int i = 0; i < dim; ++i) p *= den;
  return std::abs(det()) * group_order == p;
}

Simplex Simplex::rescaled(Int new_den) const {
  if (new_den % den != 0) throw InvariantError("Simplex::rescaled: denominator does not divide");
  Int k = new_den / den;
  return make(dim, new_den, {k * v[0], k * v[1], k * v[2]});
}

bool Simplex::operator<(const Simplex& o) const {
  if (dim != o.dim) return dim < o.dim;
  if (den != o.den) return den < o.den;
  return v < o.v;
}

bool Simplex::operator==(const Simplex& o) const {
  return dim == o.dim && den == o.den && v == o.v;
}

Chart chart_coordinates(const Simplex& s) {
  Chart ch;
  ch.simplex = s;
  const Int d = s.det();
  if (d == 0) throw InputError("chart_coordinates: degenerate simplex");
  std::array<Vec, 3> raw{};
  if (s.dim == 3) {
    for (int j = 0; j < 3; ++j) raw[j] = cross(s.v[(j + 1) % 3], s.v[(j + 2) % 3]);
  } else {
    raw[0] = {s.v[1][1], -s.v[1][0], 0};
    raw[1] = {-s.v[0][1], s.v[0][0], 0};
  }
  for (int j = 0; j < s.dim; ++j) {
    Vec c = s.den * raw[j];
    for (Int& x : c) {
      if (x % d != 0) throw InputError("chart_coordinates: simplex is not unimodular");
      x /= d;
    }
    ch.coords[j] = c;
  }
  return ch;
}

std::string point_str(const Vec& p, Int den, int dim) {
  Int g = den;
  for (int k = 0; k < dim; ++k) g = std::gcd(g, p[k]);
  if (g == 0) g = 1;
  std::ostringstream os;
  os << "1/" << den / g << "(";
  for (int k = 0; k < dim; ++k) os << (k ? "," : "") << p[k] / g;
  os << ")";
  return os.str();
}

std::string laurent_str(const Vec& m, int dim, const char* names) {
  std::string num, den;
  for (int k = 0; k < dim; ++k) {
    Int e = m[k];
    if (e == 0) continue;
    std::string& part = e > 0 ? num : den;
    part += names[k];
    if (std::abs(e) > 1) part += "^" + std::to_string(std::abs(e));
  }
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/" + den;
}

}  // namespace mckay
