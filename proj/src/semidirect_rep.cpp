#include "mckay/semidirect_rep.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// Abstract elements of a catalog group: rotation part k and reflection bit e.
struct HElem {
  Int k = 0;
  int e = 0;
  bool operator<(const HElem& o) const { return k != o.k ? k < o.k : e < o.e; }
  bool operator==(const HElem& o) const { return k == o.k && e == o.e; }
};

Int rotation_modulus(const HSpec& h) {
  switch (h.kind) {
    case HSpec::Kind::cyclic: return h.m;
    case HSpec::Kind::dihedral: return h.m;
    case HSpec::Kind::klein: return 2;
    case HSpec::Kind::z3: return 3;
  }
  return 1;
}

HElem mul(const HSpec& h, HElem a, HElem b) {
  const Int m = rotation_modulus(h);
  // Klein four is the dihedral formula with m = 2.
  return {mod(a.k + (a.e ? -b.k : b.k), m), a.e ^ b.e};
}

std::vector<HElem> generators(const HSpec& h) {
  if (h.kind == HSpec::Kind::cyclic || h.kind == HSpec::Kind::z3) return {{1 % rotation_modulus(h), 0}};
  return {{1, 0}, {0, 1}};
}

using Perm = std::vector<int>;

struct NGroup {
  std::vector<Int> d;
  int size = 1;
  std::vector<Int> elem(int idx) const {
    std::vector<Int> x(d.size());
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
      x[i] = idx % d[i];
      idx = static_cast<int>(idx / d[i]);
    }
    return x;
  }
  int index(const std::vector<Int>& x) const {
    Int idx = 0;
    for (std::size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + mod(x[i], d[i]);
    return static_cast<int>(idx);
  }
};

NGroup make_n(const SemidirectSpec& s) {
  NGroup g{s.N, 1};
  for (Int x : s.N) {
    if (x < 1) throw InputError("orders of N must be positive");
    g.size *= static_cast<int>(x);
  }
  return g;
}

Perm matrix_perm(const NGroup& N, const IntMatrix& A) {
  const std::size_t r = N.d.size();
  if (A.size() != r) throw InputError("action matrix has the wrong number of rows");
  for (std::size_t i = 0; i < r; ++i) {
    if (A[i].size() != r) throw InputError("action matrix has the wrong number of columns");
    for (std::size_t j = 0; j < r; ++j)
      if (mod(A[i][j] * N.d[j], N.d[i]) != 0)
        throw InputError("action matrix is not well defined modulo the orders of N");
  }
  Perm p(static_cast<std::size_t>(N.size));
  std::vector<char> hit(static_cast<std::size_t>(N.size), 0);
  for (int x = 0; x < N.size; ++x) {
    auto v = N.elem(x);
    std::vector<Int> w(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) w[i] += A[i][j] * v[j];
    p[x] = N.index(w);
    if (hit[p[x]]++) throw InputError("action matrix is not invertible");
  }
  return p;
}

struct HAction {
  std::vector<HElem> elems;  // in BFS order, identity first
  std::vector<Perm> perm;    // action on N elements
};

HAction realize(const SemidirectSpec& s, const NGroup& N) {
  const auto gens = generators(s.H);
  if (static_cast<int>(s.action.size()) != s.H.num_generators())
    throw InputError("expected " + std::to_string(s.H.num_generators()) + " action matrices for " +
                     s.H.str());
  std::vector<Perm> gp;
  for (const auto& A : s.action) gp.push_back(matrix_perm(N, A));
  Perm id(static_cast<std::size_t>(N.size));
  std::iota(id.begin(), id.end(), 0);
  std::map<HElem, Perm> seen{{HElem{}, id}};
  std::deque<HElem> q{HElem{}};
  HAction out;
  while (!q.empty()) {
    HElem h = q.front();
    q.pop_front();
    out.elems.push_back(h);
    out.perm.push_back(seen.at(h));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      HElem hg = mul(s.H, h, gens[g]);
      const Perm& ph = seen.at(h);
      Perm p(ph.size());
      for (std::size_t x = 0; x < p.size(); ++x) p[x] = ph[gp[g][x]];
      auto it = seen.find(hg);
      if (it == seen.end()) {
        seen.emplace(hg, std::move(p));
        q.push_back(hg);
      } else if (it->second != p) {
        throw InputError("action matrices do not satisfy the relations of " + s.H.str());
      }
    }
  }
  if (static_cast<Int>(out.elems.size()) != s.H.order())
    throw InvariantError("catalog generators do not generate " + s.H.str());
  return out;
}

// Image of the character b under an automorphism p of N: b o p.
int char_image(const SemidirectSpec& s, const NGroup& N, const Perm& p, int c) {
  const auto b = n_char(s, c);
  const std::size_t r = N.d.size();
  Int L = 1;
  for (Int x : N.d) L = std::lcm(L, x);
  std::vector<Int> out(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<Int> ej(r, 0);
    ej[j] = 1 % N.d[j];
    auto x = N.elem(p[N.index(ej)]);
    Int num = 0;
    for (std::size_t i = 0; i < r; ++i) num += b[i] * x[i] * (L / N.d[i]);
    if ((N.d[j] * num) % L != 0) throw InvariantError("dual action is not integral");
    out[j] = mod(N.d[j] * num / L, N.d[j]);
  }
  return n_char_index(s, out);
}

Int elem_order(const HSpec& h, HElem x) {
  Int n = 1;
  for (HElem y = x; !(y == HElem{}); y = mul(h, y, x)) ++n;
  return n;
}

HSpec identify(const HSpec& H, const std::vector<HElem>& S) {
  const Int s = static_cast<Int>(S.size());
  bool abelian = true;
  for (const auto& a : S)
    for (const auto& b : S)
      if (!(mul(H, a, b) == mul(H, b, a))) abelian = false;
  if (!abelian) return {HSpec::Kind::dihedral, s / 2};
  for (const auto& a : S)
    if (elem_order(H, a) == s) return {HSpec::Kind::cyclic, s};
  if (s == 4) return {HSpec::Kind::klein, 2};
  throw InputError("stabilizer of order " + std::to_string(s) + " is outside the catalog");
}

}  // namespace

Int HSpec::order() const {
  switch (kind) {
    case Kind::cyclic: return m;
    case Kind::dihedral: return 2 * m;
    case Kind::klein: return 4;
    case Kind::z3: return 3;
  }
  return 1;
}

int HSpec::num_generators() const {
  return kind == Kind::cyclic || kind == Kind::z3 ? 1 : 2;
}

std::vector<Int> HSpec::irr_dims() const {
  switch (kind) {
    case Kind::cyclic: return std::vector<Int>(static_cast<std::size_t>(m), 1);
    case Kind::z3: return {1, 1, 1};
    case Kind::klein: return {1, 1, 1, 1};
    case Kind::dihedral: {
      if (m <= 2) return std::vector<Int>(static_cast<std::size_t>(2 * m), 1);
      std::vector<Int> d(m % 2 == 0 ? 4 : 2, 1);
      d.insert(d.end(), static_cast<std::size_t>(m % 2 == 0 ? m / 2 - 1 : (m - 1) / 2), 2);
      return d;
    }
  }
  return {1};
}

std::string HSpec::str() const {
  switch (kind) {
    case Kind::cyclic: return "Z/" + std::to_string(m);
    case Kind::dihedral: return "D" + std::to_string(2 * m);
    case Kind::klein: return "V4";
    case Kind::z3: return "Z/3";
  }
  return "?";
}

Int SemidirectSpec::order() const {
  return static_cast<Int>(num_chars_N()) * H.order();
}

int SemidirectSpec::num_chars_N() const {
  Int n = 1;
  for (Int x : N) n *= x;
  return static_cast<int>(n);
}

SemidirectSpec dihedral_spec(Int n) {
  if (n < 2) throw InputError("dihedral group needs n >= 2");
  return {{n}, {HSpec::Kind::cyclic, 2}, {{{n - 1}}}};
}

std::string IrrEntry::label() const {
  return "rho_" + std::to_string(orbit) + "^" + std::to_string(j);
}

std::vector<Int> IrrLayout::dims() const {
  std::vector<Int> d;
  for (const auto& e : irr) d.push_back(e.dim);
  return d;
}

int n_char_index(const SemidirectSpec& spec, const std::vector<Int>& b) {
  Int idx = 0;
  for (std::size_t i = 0; i < spec.N.size(); ++i) idx = idx * spec.N[i] + mod(b.at(i), spec.N[i]);
  return static_cast<int>(idx);
}

std::vector<Int> n_char(const SemidirectSpec& spec, int index) {
  std::vector<Int> b(spec.N.size());
  for (int i = static_cast<int>(spec.N.size()) - 1; i >= 0; --i) {
    b[i] = index % spec.N[i];
    index = static_cast<int>(index / spec.N[i]);
  }
  return b;
}

std::vector<IrrOrbit> dual_orbits(const SemidirectSpec& spec) {
  const NGroup N = make_n(spec);
  const HAction act = realize(spec, N);
  std::vector<IrrOrbit> out;
  std::vector<char> done(static_cast<std::size_t>(N.size), 0);
  for (int c = 0; c < N.size; ++c) {
    if (done[c]) continue;
    std::vector<int> members;
    std::vector<HElem> stab;
    for (std::size_t h = 0; h < act.elems.size(); ++h) {
      int img = char_image(spec, N, act.perm[h], c);
      if (img == c) stab.push_back(act.elems[h]);
      if (!done[img]) {
        done[img] = 1;
        members.push_back(img);
      }
    }
    std::sort(members.begin(), members.end());
    if (static_cast<Int>(members.size()) * static_cast<Int>(stab.size()) != spec.H.order())
      throw InvariantError("orbit-stabilizer count failed");
    IrrOrbit o{members, identify(spec.H, stab), {}};
    o.tau_dims = o.stabilizer.irr_dims();
    out.push_back(std::move(o));
  }
  return out;
}

IrrLayout irr_table(const SemidirectSpec& spec) {
  IrrLayout L{spec, dual_orbits(spec), {}};
  Int sum = 0;
  for (int i = 0; i < static_cast<int>(L.orbits.size()); ++i) {
    const auto& o = L.orbits[i];
    for (int j = 0; j < static_cast<int>(o.tau_dims.size()); ++j) {
      Int d = static_cast<Int>(o.members.size()) * o.tau_dims[j];
      L.irr.push_back({i, j, d});
      sum += d * d;
    }
  }
  if (sum != spec.order())
    throw InvariantError("sum of squared dimensions " + std::to_string(sum) + " differs from |G| = " +
                         std::to_string(spec.order()));
  return L;
}

StabilityVector theta_semidirect(const SemidirectSpec& spec, const std::vector<Rational>& theta_N,
                                 const std::vector<Rational>& theta_H, bool require_invariant) {
  const IrrLayout L = irr_table(spec);
  const auto hdims = spec.H.irr_dims();
  if (static_cast<int>(theta_N.size()) != spec.num_chars_N())
    throw InputError("theta_N needs one entry per character of N");
  if (theta_H.size() != hdims.size())
    throw InputError("theta_H needs one entry per irreducible representation of H");
  Rational sN(0), sH(0);
  for (std::size_t i = 0; i < theta_N.size(); ++i) {
    sN += theta_N[i];
    if (i > 0 && theta_N[i] <= Int{0}) throw InputError("theta_N is not 0-generated");
  }
  for (std::size_t j = 0; j < theta_H.size(); ++j) {
    sH += hdims[j] * theta_H[j];
    if (j > 0 && theta_H[j] <= Int{0}) throw InputError("theta_H is not 0-generated");
  }
  if (sN != Rational(0) || sH != Rational(0))
    throw InputError("theta parameters must vanish on the regular representation");
  StabilityVector th;
  for (const auto& e : L.irr) {
    const auto& o = L.orbits[e.orbit];
    const Int tau = o.tau_dims[e.j];
    if (e.orbit == 0) {
      th.entries.emplace_back(std::vector<Rational>{tau * theta_N[0], theta_H[e.j]});
    } else {
      Rational s(0);
      for (int c : o.members) {
        if (require_invariant && theta_N[c] != theta_N[o.members[0]])
          throw InputError("theta_N is not constant on the orbit of character " +
                           std::to_string(o.members[0]));
        s += theta_N[c];
      }
      th.entries.emplace_back(std::vector<Rational>{tau * s, Rational(0)});
    }
    th.dims.push_back(e.dim);
  }
  return th;
}

}  // namespace mckay
