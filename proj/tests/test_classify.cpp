#include <doctest.h>

#include <map>
#include <set>

#include "mckay/classify.hpp"
#include "mckay/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mckay;
using support::g2;
using support::g3;

namespace {

// Element set of the subgroup of (Q/Z)^3 generated by the given 1/n(...)
// points, each stored scaled to `den`, canonicalized over the six coordinate
// permutations.
using Elems = std::set<Vec>;

Elems closure(const std::vector<Vec>& gens, Int den) {
  Elems out{Vec{0, 0, 0}};
  std::vector<Vec> todo{Vec{0, 0, 0}};
  while (!todo.empty()) {
    Vec e = todo.back();
    todo.pop_back();
    for (const Vec& g : gens) {
      Vec s{oracle::mod(e[0] + g[0], den), oracle::mod(e[1] + g[1], den), oracle::mod(e[2] + g[2], den)};
      if (out.insert(s).second) todo.push_back(s);
    }
  }
  return out;
}

Elems canonical(const Elems& es) {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  Elems best;
  bool first = true;
  for (const auto& p : perms) {
    Elems t;
    for (const Vec& e : es) t.insert(Vec{e[p[0]], e[p[1]], e[p[2]]});
    if (first || t < best) best = t;
    first = false;
  }
  return best;
}

std::map<Int, int> brute_group_counts(Int max_order) {
  const Int den = 27720;  // lcm(1..12)
  std::set<Elems> seen;
  for (Int n = 1; n <= max_order; ++n) {
    std::vector<Vec> pts;
    for (Int a = 0; a < n; ++a)
      for (Int b = 0; b < n; ++b) pts.push_back({a * (den / n), b * (den / n), oracle::mod(-a - b, n) * (den / n)});
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i; j < pts.size(); ++j) {
        auto E = closure({pts[i], pts[j]}, den);
        if (static_cast<Int>(E.size()) <= max_order) seen.insert(canonical(E));
      }
  }
  std::map<Int, int> out;
  for (const auto& E : seen) ++out[static_cast<Int>(E.size())];
  return out;
}

}  // namespace

TEST_CASE("abelian subgroups of SL(3) up to permutation") {
  auto gs = abelian_sl3_groups(12);
  CHECK(gs.size() == 39);
  std::map<Int, int> per;
  for (const auto& G : gs) ++per[G.order()];
  CHECK(per == brute_group_counts(12));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(isomorphic_up_to_permutation(gs[i], gs[j]));
}

TEST_CASE("subgroups and quotients") {
  CHECK(subgroups(g3(6, 1, 2, 3)).size() == 4);
  CHECK(subgroups(g3({{2, {1, 1, 0}}, {2, {1, 0, 1}}})).size() == 5);
  auto klein = g3({{4, {1, 1, 2}}, {2, {1, 0, 1}}});
  auto N = g3(2, 1, 1, 0);
  CHECK(quotient_is_zm_zm(klein, N));
  CHECK(quotient_type(klein, N).order == 4);
  CHECK(quotient_type(klein, N).exponent == 2);
  CHECK_FALSE(quotient_is_zm_zm(g3(6, 1, 2, 3), g3(2, 1, 0, 1)));
}

TEST_CASE("moduli isomorphism in dimension three") {
  auto G = g3(4, 1, 1, 2), N = g3(2, 1, 1, 0);
  CHECK(moduli_iso_predicate_3d(G, N));
  CHECK(moduli_iso_oracle(NormalChain::make({G, N})));
  CHECK(moduli_iso_predicate_3d(g3(4, 2, 1, 1), g3(2, 0, 1, 1)));

  auto Z6 = g3(6, 1, 2, 3);
  CHECK_FALSE(moduli_iso_predicate_3d(Z6, g3(2, 1, 0, 1)));
  CHECK_FALSE(moduli_iso_oracle(NormalChain::make({Z6, g3(2, 1, 0, 1)})));
  CHECK(moduli_iso_oracle(NormalChain::make({Z6})));

  CHECK_THROWS_AS(moduli_iso_predicate_3d(Z6, Z6), InputError);
  CHECK_THROWS_AS(moduli_iso_predicate_3d(Z6, AbelianAction()), InputError);
}

TEST_CASE("moduli isomorphism in dimension two") {
  CHECK(moduli_iso_predicate_2d(g2(4, 1, 1), g2(2, 1, 1)));
  CHECK_FALSE(moduli_iso_predicate_2d(g2(4, 1, 3), g2(2, 1, 1)));
  CHECK(moduli_iso_predicate_2d(g2(9, 1, 1), g2(3, 1, 1)));
  CHECK(moduli_iso_oracle(NormalChain::make({g2(9, 1, 1), g2(3, 1, 1)})));
  CHECK_FALSE(moduli_iso_oracle(NormalChain::make({g2(4, 1, 3), g2(2, 1, 1)})));
  CHECK_THROWS_AS(moduli_iso_predicate_2d(g2(4, 1, 1), g2(4, 1, 1)), InputError);
  CHECK_THROWS_AS(moduli_iso_predicate_2d(g2(4, 1, 2), g2(2, 1, 0)), InputError);
}

TEST_CASE("isomorphic as varieties only") {
  auto G = g3(6, 1, 1, 4), N = g3(3, 1, 1, 1);
  auto v = classify_pair(G, N, true);
  CHECK(v.variety_iso);
  CHECK_FALSE(v.moduli_iso);
  CHECK(*v.variety_oracle);
  CHECK_FALSE(*v.moduli_oracle);
  CHECK(*v.oracle_agreement);
  CHECK(v.matched_case == IsoCase::case2_unique_resolution);
}

TEST_CASE("case three") {
  auto G = g3(12, 1, 5, 6), N = g3(2, 1, 1, 0);
  CHECK(case3_parameter(G, N) == Int{5});
  auto v = classify_pair(G, N, true);
  CHECK(v.variety_iso);
  CHECK(v.matched_case == IsoCase::case3_a2_mod_4r);
  CHECK(*v.oracle_agreement);
  CHECK(palindromic_continued_fraction(12, 5));
  CHECK(hj_continued_fraction(12, 5) == std::vector<Int>{3, 2, 3});
}

TEST_CASE("case one") {
  auto G = g3({{4, {1, 1, 2}}, {2, {1, 0, 1}}}), N = g3(2, 1, 1, 0);
  auto v = classify_pair(G, N, true);
  CHECK(v.variety_iso);
  CHECK(v.matched_case == IsoCase::case1_zmzm);
  CHECK(*v.variety_oracle);
  CHECK(*v.oracle_agreement);
}

TEST_CASE("negative instances") {
  auto Z6 = g3(6, 1, 2, 3);
  for (const auto& N : {g3(2, 1, 0, 1), g3(3, 1, 2, 0)}) {
    auto v = classify_pair(Z6, N, true);
    CHECK_FALSE(v.moduli_iso);
    CHECK_FALSE(v.variety_iso);
    CHECK(v.matched_case == IsoCase::none);
    CHECK(*v.oracle_agreement);
  }
  CHECK_FALSE(variety_iso_oracle(Z6, g3(2, 1, 0, 1)));
  CHECK(variety_iso_oracle(Z6, Z6));
}

TEST_CASE("predicates agree with the oracles on small pairs") {
  for (const auto& [G, N] : abelian_sl3_pairs(16)) {
    auto v = classify_pair(G, N, true);
    CHECK_MESSAGE(*v.oracle_agreement, G.str() << " > " << N.str());
    if (v.moduli_iso) CHECK(v.variety_iso);
  }
  for (const auto& [G, N] : cyclic_pairs_2d(12)) {
    auto v = classify_pair(G, N, true);
    CHECK_MESSAGE(*v.oracle_agreement, G.str() << " > " << N.str());
  }
}

TEST_CASE("case three forces a palindromic continued fraction") {
  for (const auto& [G, N] : abelian_sl3_pairs(24))
    if (auto a = case3_parameter(G, N)) CHECK(palindromic_continued_fraction(G.order(), *a));
}

TEST_CASE("case names") {
  CHECK(to_string(IsoCase::none) == "none");
  CHECK(to_string(IsoCase::case1_zmzm) == "case1-ZmZm");
  CHECK(to_string(IsoCase::case2_unique_resolution) == "case2-unique-resolution");
  CHECK(to_string(IsoCase::case3_a2_mod_4r) == "case3-a2mod4r");
  CHECK(to_string(IsoCase::case4_composite) == "case4-composite");
}
