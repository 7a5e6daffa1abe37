#include "mckay/quiver_stability.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

McKayQuiver mckay_quiver_abelian(const AbelianAction& G) {
  McKayQuiver Q{G, G.num_chars(), {}};
  for (int c = 0; c < G.num_chars(); ++c)
    for (int k = 0; k < G.dim(); ++k) Q.arrows.push_back({c, G.char_add(c, G.coordinate_char(k)), k});
  return Q;
}

std::vector<int> mask_members(CharMask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

std::vector<CharMask> closed_subsets(const MonomialSet& M, int guard) {
  const int n = static_cast<int>(M.size());
  if (n > guard || n > 64)
    throw InputError("closed_subsets: |G| = " + std::to_string(n) + " exceeds the guard " +
                     std::to_string(std::min(guard, 64)));
  const AbelianAction& G = M.group;
  std::vector<CharMask> reach(n), coreach(n);
  for (int c = 0; c < n; ++c) reach[c] = coreach[c] = CharMask{1} << c;
  std::vector<std::pair<int, int>> arrows;
  for (const Arrow& a : skeleton(M))
    arrows.push_back({a.source, G.char_add(a.source, G.coordinate_char(a.k))});
  // Transitive closure by relaxation; n is small.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [s, t] : arrows) {
      for (int c = 0; c < n; ++c) {
        if ((reach[c] >> s & 1) && !(reach[c] >> t & 1)) {
          reach[c] |= CharMask{1} << t;
          changed = true;
        }
        if ((coreach[c] >> t & 1) && !(coreach[c] >> s & 1)) {
          coreach[c] |= CharMask{1} << s;
          changed = true;
        }
      }
    }
  }
  const CharMask full = n == 64 ? ~CharMask{0} : (CharMask{1} << n) - 1;
  std::vector<CharMask> out;
  auto rec = [&](auto&& self, int i, CharMask in, CharMask outm) -> void {
    if (i == n) {
      if (in != 0 && in != full) out.push_back(in);
      return;
    }
    if ((in | outm) >> i & 1) return self(self, i + 1, in, outm);
    CharMask in2 = in | reach[i];
    if (!(in2 & outm)) self(self, i + 1, in2, outm);
    CharMask out2 = outm | coreach[i];
    if (!(out2 & in)) self(self, i + 1, in, out2);
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CharMask> closed_subsets(const AbelianAction& G, const Simplex& s, int guard) {
  return closed_subsets(chart_monomials(G, s), guard);
}

ChamberPresentation chamber_inequalities(const Fan& fan, Exec exec, int guard) {
  const auto& T = fan.triangles;
  std::vector<std::vector<CharMask>> per(T.size());
  // A chart's own constellation when it carries one (G-graph or Omega*Gamma),
  // otherwise the [0,1) set.
  auto chart_subsets = [&](std::size_t i) {
    return T[i].constellation ? closed_subsets(*T[i].constellation, guard)
                              : closed_subsets(fan.group, T[i].tri, guard);
  };
  if (exec == Exec::parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < T.size(); ++i) {
      try {
        per[i] = chart_subsets(i);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t i = 0; i < T.size(); ++i) per[i] = chart_subsets(i);
  }
  std::map<CharMask, int> first;
  for (std::size_t i = 0; i < per.size(); ++i)
    for (CharMask m : per[i]) first.emplace(m, static_cast<int>(i));
  ChamberPresentation P{fan.group, {}, {}};
  for (auto [m, c] : first) {
    P.subsets.push_back(m);
    P.source_chart.push_back(c);
  }
  return P;
}

// -- LexRational ----------------------------------------------------------------

int LexRational::sign() const {
  for (const Rational& r : levels_)
    if (r != Rational(0)) return r > Int{0} ? 1 : -1;
  return 0;
}

LexRational& LexRational::operator+=(const LexRational& o) {
  if (levels_.size() < o.levels_.size()) levels_.resize(o.levels_.size(), Rational(0));
  for (std::size_t i = 0; i < o.levels_.size(); ++i) levels_[i] += o.levels_[i];
  return *this;
}

LexRational operator*(Int k, const LexRational& a) {
  LexRational r = a;
  for (Rational& x : r.levels_) x *= k;
  return r;
}

std::string lex_str(const LexRational& x, const char* eps) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < x.levels().size(); ++i) {
    Rational r = x.levels()[i];
    if (r == Rational(0)) continue;
    os << (r < Int{0} ? (any ? " - " : "-") : (any ? " + " : ""));
    Rational a = r < Int{0} ? -r : r;
    bool unit = a == Rational(1) && i > 0;
    if (!unit) os << a.numerator() << (a.denominator() != 1 ? "/" + std::to_string(a.denominator()) : "");
    if (i > 0) os << (unit ? "" : "*") << eps << (x.levels().size() > 2 ? std::to_string(i) : "");
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

LexRational StabilityVector::regular_value() const {
  LexRational s;
  for (std::size_t i = 0; i < entries.size(); ++i) s += (i < dims.size() ? dims[i] : 1) * entries[i];
  return s;
}

LexRational StabilityVector::value(CharMask S) const {
  LexRational s;
  for (int c : mask_members(S)) s += entries.at(static_cast<std::size_t>(c));
  return s;
}

// -- theta ----------------------------------------------------------------------

std::vector<int> quotient_characters(const AbelianAction& big, const AbelianAction& small) {
  std::vector<int> out;
  for (int c = 0; c < big.num_chars(); ++c)
    if (small.char_index(big.char_representative(c)) == 0) out.push_back(c);
  return out;
}

namespace {

void require_zero_generated(const std::vector<Rational>& v, std::size_t expected, int level) {
  if (v.size() != expected)
    throw InputError("theta level " + std::to_string(level) + " has " + std::to_string(v.size()) +
                     " entries, expected " + std::to_string(expected));
  Rational sum(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += v[i];
    if (i > 0 && v[i] <= Int{0})
      throw InputError("theta level " + std::to_string(level) +
                       " is not 0-generated: a nontrivial entry is not positive");
  }
  if (sum != Rational(0))
    throw InputError("theta level " + std::to_string(level) + " does not sum to zero");
}

}  // namespace

StabilityVector theta_construct(const NormalChain& chain,
                                const std::vector<std::vector<Rational>>& levels) {
  const int k = chain.length() - 1;
  if (static_cast<int>(levels.size()) != k + 1)
    throw InputError("theta_construct needs one level per chain member");
  const AbelianAction& G = chain.groups[0];
  const AbelianAction& inner = chain.groups[k];
  require_zero_generated(levels[0], static_cast<std::size_t>(inner.order()), 0);
  std::vector<std::vector<int>> qchars(static_cast<std::size_t>(k + 1));
  for (int i = 1; i <= k; ++i) {
    qchars[i] = quotient_characters(chain.groups[k - i], chain.groups[k - i + 1]);
    require_zero_generated(levels[i], qchars[i].size(), i);
  }
  StabilityVector th;
  th.dims.assign(static_cast<std::size_t>(G.num_chars()), 1);
  for (int c = 0; c < G.num_chars(); ++c) {
    const Vec& m = G.char_representative(c);
    std::vector<Rational> lv(static_cast<std::size_t>(k + 1), Rational(0));
    lv[0] = levels[0][inner.char_index(m)];
    for (int i = 1; i <= k; ++i) {
      const AbelianAction& B = chain.groups[k - i];
      const AbelianAction& S = chain.groups[k - i + 1];
      if (S.char_index(m) != 0) continue;
      int b = B.char_index(m);
      auto it = std::lower_bound(qchars[i].begin(), qchars[i].end(), b);
      lv[i] = levels[i][static_cast<std::size_t>(it - qchars[i].begin())];
    }
    th.entries.emplace_back(std::move(lv));
  }
  return th;
}

bool is_generic(const StabilityVector& theta, Exec exec) {
  const int n = static_cast<int>(theta.entries.size());
  std::size_t L = 0;
  for (const auto& e : theta.entries) L = std::max(L, e.levels().size());
  // Integer copies of every level.
  std::vector<std::vector<Int>> w(static_cast<std::size_t>(n), std::vector<Int>(L, 0));
  for (std::size_t l = 0; l < L; ++l) {
    Int den = 1;
    for (const auto& e : theta.entries) den = std::lcm(den, e.level(l).denominator());
    for (int i = 0; i < n; ++i) {
      Rational r = theta.entries[i].level(l) * den;
      w[i][l] = r.numerator();
    }
  }
  std::vector<Int> d(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n && i < static_cast<int>(theta.dims.size()); ++i) d[i] = theta.dims[i];
  double count = 1;
  for (Int x : d) count *= static_cast<double>(x + 1);
  if (count > static_cast<double>(1u << 30)) throw InputError("is_generic: too many sub-dimension vectors");
  const Int total = std::accumulate(d.begin(), d.end(), Int{0});

  // Split the leading digits across threads; odometer over the rest.
  int p = 0;
  Int prefixes = 1;
  while (p < n && prefixes < 256) prefixes *= d[p++] + 1;

  auto scan = [&](Int prefix) -> bool {
    std::vector<Int> dig(static_cast<std::size_t>(n), 0);
    std::vector<Int> sum(L, 0);
    Int weight = 0;
    for (int i = 0; i < p; ++i) {
      dig[i] = prefix % (d[i] + 1);
      prefix /= d[i] + 1;
      weight += dig[i];
      for (std::size_t l = 0; l < L; ++l) sum[l] += dig[i] * w[i][l];
    }
    while (true) {
      if (weight != 0 && weight != total &&
          std::all_of(sum.begin(), sum.end(), [](Int s) { return s == 0; }))
        return false;
      int j = p;
      for (; j < n; ++j) {
        if (dig[j] < d[j]) {
          ++dig[j];
          ++weight;
          for (std::size_t l = 0; l < L; ++l) sum[l] += w[j][l];
          break;
        }
        weight -= dig[j];
        for (std::size_t l = 0; l < L; ++l) sum[l] -= dig[j] * w[j][l];
        dig[j] = 0;
      }
      if (j == n) return true;
    }
  };

  bool generic = true;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(&& : generic)
    for (Int q = 0; q < prefixes; ++q) generic = generic && scan(q);
  } else {
    for (Int q = 0; q < prefixes && generic; ++q) generic = scan(q);
  }
  return generic;
}

bool theta_in_chamber(const StabilityVector& theta, const ChamberPresentation& chamber) {
  for (CharMask S : chamber.subsets)
    if (theta.value(S).sign() <= 0) return false;
  return true;
}

bool theta_in_chamber(const StabilityVector& theta, const Fan& fan, Exec exec) {
  return theta_in_chamber(theta, chamber_inequalities(fan, exec));
}

std::string mask_str(const AbelianAction& G, CharMask S) {
  std::string s = "{";
  bool first = true;
  for (int c : mask_members(S)) {
    if (!first) s += ",";
    s += G.char_label(c);
    first = false;
  }
  return s + "}";
}

}  // namespace mckay
