#include "mckay/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

AbelianAction cyclic3(Int n, Int a, Int b) {
  return AbelianAction::from_generators(3, true, {{n, {mod(a, n), mod(b, n), mod(-a - b, n)}}});
}

std::set<Vec> scaled_elements(const AbelianAction& H, Int R) {
  std::set<Vec> s;
  const Int f = R / H.exponent();
  for (const Vec& e : H.elements()) s.insert(f * e);
  return s;
}

bool proper_nontrivial(const AbelianAction& G, const AbelianAction& N) {
  return N.order() > 1 && N.order() < G.order() && G.contains_group(N);
}

// Permutation class of a pair: the least (G elements, N elements) over the
// coordinate permutations, both scaled to the exponent of G.
std::pair<std::vector<Vec>, std::vector<Vec>> pair_key(const AbelianAction& G,
                                                       const AbelianAction& N) {
  static const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const Int R = G.exponent();
  const auto gs = scaled_elements(G, R), ns = scaled_elements(N, R);
  std::pair<std::vector<Vec>, std::vector<Vec>> best;
  bool first = true;
  for (const auto& p : perms) {
    if (G.dim() == 2 && p[2] != 2) continue;
    auto permute = [&](const std::set<Vec>& s) {
      std::vector<Vec> out;
      for (const Vec& e : s) out.push_back({e[p[0]], e[p[1]], e[p[2]]});
      std::sort(out.begin(), out.end());
      return out;
    };
    auto k = std::make_pair(permute(gs), permute(ns));
    if (first || k < best) {
      best = std::move(k);
      first = false;
    }
  }
  return best;
}

}  // namespace

std::string to_string(IsoCase c) {
  switch (c) {
    case IsoCase::none: return "none";
    case IsoCase::case1_zmzm: return "case1-ZmZm";
    case IsoCase::case2_unique_resolution: return "case2-unique-resolution";
    case IsoCase::case3_a2_mod_4r: return "case3-a2mod4r";
    case IsoCase::case4_composite: return "case4-composite";
  }
  return "none";
}

QuotientType quotient_type(const AbelianAction& G, const AbelianAction& N) {
  if (!G.contains_group(N)) throw InputError(N.str() + " is not a subgroup of " + G.str());
  const Int R = G.exponent();
  const auto ns = scaled_elements(N, R);
  QuotientType q{G.order() / N.order(), 1};
  for (const Vec& g : G.elements()) {
    Int k = 1;
    Vec x = g;
    while (!ns.count({mod(x[0], R), mod(x[1], R), mod(x[2], R)})) {
      x = x + g;
      ++k;
    }
    q.exponent = std::max(q.exponent, k);
  }
  return q;
}

bool quotient_is_zm_zm(const AbelianAction& G, const AbelianAction& N) {
  auto q = quotient_type(G, N);
  return q.exponent > 1 && q.exponent * q.exponent == q.order;
}

std::vector<AbelianAction> subgroups(const AbelianAction& G) {
  // Subgroups of a group of rank <= 2 are 2-generated.
  const auto& el = G.elements();
  std::map<std::vector<Vec>, AbelianAction> seen;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i; j < el.size(); ++j) {
      AbelianAction H = AbelianAction::from_scaled(G.dim(), G.exponent(), {el[i], el[j]});
      auto s = scaled_elements(H, G.exponent());
      seen.emplace(std::vector<Vec>(s.begin(), s.end()), H);
    }
  std::vector<AbelianAction> out;
  for (auto& [k, H] : seen) out.push_back(H);
  std::stable_sort(out.begin(), out.end(),
                   [](const AbelianAction& a, const AbelianAction& b) { return a.order() < b.order(); });
  return out;
}

std::vector<AbelianAction> abelian_sl3_groups(Int max_order) {
  std::map<std::vector<Vec>, AbelianAction> seen;
  for (Int b = 1; b <= max_order; ++b)
    for (Int a = 1; a <= b; ++a) {
      if (b % a != 0 || a * b > max_order) continue;
      for (Int g0 = 0; g0 < b; ++g0)
        for (Int g1 = 0; g1 < b; ++g1) {
          const Vec g{g0, g1, mod(-g0 - g1, b)};
          for (Int h0 = 0; h0 < a; ++h0)
            for (Int h1 = 0; h1 < a; ++h1) {
              const Int f = b / a;
              const Vec h{f * h0, f * h1, mod(-f * (h0 + h1), b)};
              AbelianAction G = AbelianAction::from_generators(3, true, {{b, g}, {b, h}});
              if (G.order() != a * b) continue;
              seen.emplace(canonical_form(G).elements, G);
            }
        }
    }
  std::vector<AbelianAction> out;
  for (auto& [k, G] : seen) out.push_back(G);
  std::stable_sort(out.begin(), out.end(),
                   [](const AbelianAction& x, const AbelianAction& y) { return x.order() < y.order(); });
  return out;
}

std::vector<std::pair<AbelianAction, AbelianAction>> abelian_sl3_pairs(Int max_order) {
  std::map<std::pair<std::vector<Vec>, std::vector<Vec>>, std::pair<AbelianAction, AbelianAction>> seen;
  for (const auto& G : abelian_sl3_groups(max_order))
    for (const auto& N : subgroups(G))
      if (proper_nontrivial(G, N)) seen.emplace(pair_key(G, N), std::make_pair(G, N));
  std::vector<std::pair<AbelianAction, AbelianAction>> out;
  for (auto& [k, p] : seen) out.push_back(p);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.first.order() != y.first.order() ? x.first.order() < y.first.order()
                                              : x.second.order() < y.second.order();
  });
  return out;
}

std::vector<std::pair<AbelianAction, AbelianAction>> cyclic_pairs_2d(Int max_order) {
  std::map<std::pair<std::vector<Vec>, std::vector<Vec>>, std::pair<AbelianAction, AbelianAction>> seen;
  for (Int n = 2; n <= max_order; ++n)
    for (Int a = 1; a < n; ++a) {
      if (std::gcd(n, a) != 1) continue;
      AbelianAction G = AbelianAction::from_generators(2, false, {{n, {1, a, 0}}}, true);
      for (Int s = 2; s < n; ++s) {
        if (n % s != 0) continue;
        AbelianAction N = AbelianAction::from_generators(2, false, {{s, {1, a % s, 0}}}, true);
        seen.emplace(pair_key(G, N), std::make_pair(G, N));
      }
    }
  std::vector<std::pair<AbelianAction, AbelianAction>> out;
  for (auto& [k, p] : seen) out.push_back(p);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.first.order() != y.first.order() ? x.first.order() < y.first.order()
                                              : x.second.order() < y.second.order();
  });
  return out;
}

bool moduli_iso_predicate_3d(const AbelianAction& G, const AbelianAction& N) {
  if (G.dim() != 3 || !G.sl()) throw InputError("expected an abelian subgroup of SL(3)");
  if (!proper_nontrivial(G, N)) throw InputError("N must be a proper nontrivial subgroup of G");
  const Int n = G.order();
  if (n % 2 != 0 || n < 4) return false;
  return isomorphic_up_to_permutation(G, cyclic3(n, 1, 1)) &&
         isomorphic_up_to_permutation(N, cyclic3(2, 1, 1));
}

bool moduli_iso_predicate_2d(const AbelianAction& G, const AbelianAction& N) {
  if (G.dim() != 2 || G.invariant_factors().size() != 1)
    throw InputError("expected a cyclic subgroup of GL(2)");
  for (const Vec& e : G.elements())
    if (e != Vec{0, 0, 0} && (e[0] == 0 || e[1] == 0)) throw InputError("G must be small");
  if (!proper_nontrivial(G, N)) throw InputError("N must be a proper nontrivial subgroup of G");
  const Int n = G.order();
  auto scalar = AbelianAction::from_generators(2, false, {{n, {1, 1, 0}}});
  return isomorphic_up_to_permutation(G, scalar);
}

bool case2_form(const AbelianAction& G) {
  const Int r = G.order();
  if (G.invariant_factors().size() != 1 || r < 2) return false;
  return isomorphic_up_to_permutation(G, cyclic3(r, 1, 1)) ||
         isomorphic_up_to_permutation(G, cyclic3(r, 1, r - 1));
}

std::optional<Int> case3_parameter(const AbelianAction& G, const AbelianAction& N) {
  const Int n = G.order();
  if (n % 2 != 0 || G.invariant_factors().size() != 1) return std::nullopt;
  if (!isomorphic_up_to_permutation(N, cyclic3(2, 1, 1))) return std::nullopt;
  const Int four_r = 2 * n;
  const auto cf = canonical_form(G);
  for (Int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1 && (a * a - 1) % four_r == 0 && canonical_form(cyclic3(n, 1, a)) == cf)
      return a;
  return std::nullopt;
}

IsoVerdict variety_iso_predicate(const AbelianAction& G, const AbelianAction& N) {
  if (G.dim() != 3 || !G.sl()) throw InputError("expected an abelian subgroup of SL(3)");
  if (!proper_nontrivial(G, N)) throw InputError("N must be a proper nontrivial subgroup of G");
  IsoVerdict v;
  v.moduli_iso = moduli_iso_predicate_3d(G, N);
  if (quotient_is_zm_zm(G, N)) {
    v.matched_case = IsoCase::case1_zmzm;
  } else if (case2_form(G)) {
    v.matched_case = IsoCase::case2_unique_resolution;
  } else if (case3_parameter(G, N)) {
    v.matched_case = IsoCase::case3_a2_mod_4r;
  } else {
    for (const auto& H : subgroups(G)) {
      if (H.order() <= N.order() || H.order() >= G.order() || !H.contains_group(N)) continue;
      if (quotient_is_zm_zm(G, H) && (case2_form(H) || case3_parameter(H, N))) {
        v.matched_case = IsoCase::case4_composite;
        break;
      }
    }
  }
  v.variety_iso = v.matched_case != IsoCase::none;
  return v;
}

bool moduli_iso_oracle(const NormalChain& chain, Exec exec) {
  const Fan f = iterated_fan(chain, exec);
  for (const auto& t : f.triangles)
    if (!t.constellation || !is_staircase(*t.constellation)) return false;
  return true;
}

bool variety_iso_oracle(const AbelianAction& G, const AbelianAction& N, Exec exec) {
  return g_hilb_fan_any(G).same_triangles(iterated_fan(NormalChain::make({G, N}), exec));
}

IsoVerdict classify_pair(const AbelianAction& G, const AbelianAction& N, bool run_oracles,
                         Exec exec) {
  IsoVerdict v;
  if (G.dim() == 2) {
    v.moduli_iso = moduli_iso_predicate_2d(G, N);
    v.variety_iso = v.moduli_iso;
  } else {
    v = variety_iso_predicate(G, N);
  }
  if (run_oracles) {
    v.moduli_oracle = moduli_iso_oracle(NormalChain::make({G, N}), exec);
    if (G.dim() == 3) {
      v.variety_oracle = variety_iso_oracle(G, N, exec);
      v.oracle_agreement = *v.moduli_oracle == v.moduli_iso && *v.variety_oracle == v.variety_iso;
    } else {
      v.oracle_agreement = *v.moduli_oracle == v.moduli_iso;
    }
  }
  return v;
}

bool palindromic_continued_fraction(Int n, Int a) {
  auto cf = hj_continued_fraction(n, a);
  return std::equal(cf.begin(), cf.end(), cf.rbegin());
}

}  // namespace mckay
