// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// wall-clock budget.  Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "golden.hpp"
#include "mckay/classify.hpp"
#include "mckay/io.hpp"
#include "mckay/quiver_stability.hpp"
#include "mckay/semidirect_rep.hpp"
#include "support.hpp"

using namespace mckay;
using support::g2;
using support::g3;
using support::keys;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs >= budget_s) {
    out.ok = false;
    out.detail = "over the time budget";
  }
  if (!out.ok) ++failures;
  std::printf("criterion %d: %s  %s  [%.3f s / %.0f s budget]%s%s\n", id, out.ok ? "PASS" : "FAIL", title, secs,
              budget_s, out.detail.empty() ? "" : "  -- ", out.detail.c_str());
  std::fflush(stdout);
}

void info(const std::string& line) {
  std::printf("  info: %s\n", line.c_str());
  std::fflush(stdout);
}

const AbelianAction kZ6 = g3(6, 1, 2, 3);

std::vector<Rational> random_theta(std::mt19937& rng, Int n) {
  std::uniform_int_distribution<int> num(1, 12), den(1, 6);
  std::vector<Rational> t(static_cast<std::size_t>(n));
  Rational sum(0);
  for (Int i = 1; i < n; ++i) {
    t[i] = Rational(num(rng), den(rng));
    sum += t[i];
  }
  t[0] = -sum;
  return t;
}

bool proper_nontrivial(const AbelianAction& G, const AbelianAction& N) {
  return N.order() > 1 && N.order() < G.order();
}

// --- criterion bodies ------------------------------------------------------

Outcome golden_fans() {
  Outcome o;
  auto half = g3(2, 1, 0, 1);
  o.require(keys(g_hilb_fan(half), 2) == golden::half_101(), "1/2(1,0,1) G-Hilb");
  o.require(keys(iterated_fan(NormalChain::make({half})), 2) == golden::half_101(), "1/2(1,0,1) chain");
  o.require(keys(iterated_fan(NormalChain::make({kZ6, half})), 6) == golden::z6_z3_over_z2(),
            "Z/3-Hilb(Z/2-Hilb)");
  o.require(keys(iterated_fan(NormalChain::make({kZ6, g3(3, 1, 2, 0)})), 6) == golden::z6_z2_over_z3(),
            "Z/2-Hilb(Z/3-Hilb)");
  auto steps = iterated_fan_steps(NormalChain::make({g3(30, 21, 1, 8), g3(6, 3, 1, 2), g3(2, 1, 1, 0)}));
  o.require(steps.size() == 3, "order-30 chain length");
  for (int s = 1; s <= 3 && o.ok; ++s)
    o.require(keys(steps[s - 1].fan, 30) == golden::z30_step(s), "order-30 step " + std::to_string(s));
  return o;
}

Outcome golden_constellations() {
  Outcome o;
  int matched = 0;
  for (auto [N, expected] : {std::pair{g3(2, 1, 0, 1), golden::z3_over_z2_constellations()},
                             std::pair{g3(3, 1, 2, 0), golden::z2_over_z3_constellations()}}) {
    auto f = iterated_fan(NormalChain::make({kZ6, N}));
    std::set<std::vector<Vec>> got;
    for (const auto& t : f.triangles) {
      auto M = chart_monomials(kZ6, t.tri).sorted();
      got.insert(M);
      matched += static_cast<int>(expected.count(M));
      o.require(t.constellation && t.constellation->sorted() == M, "Omega*Gamma differs from the chart monomials");
    }
    o.require(got == expected, "constellation sets of the chain through " + N.str());
  }
  o.require(matched == 12, "matched " + std::to_string(matched) + " of 12 sets");
  return o;
}

Outcome g_hilb_uniqueness() {
  Outcome o;
  int literal_unique = 0;
  const auto groups = abelian_sl3_groups(12);
  for (const auto& G : groups) {
    const auto cr = g_hilb_fan(G);
    int count = 0, literal = 0;
    bool equal = false;
    for (const auto& f : enumerate_crepant_fans(G, 12)) {
      if (all_charts_have_g_graphs(f)) {
        ++count;
        equal = f.same_triangles(cr);
      }
      bool stair = true;
      for (const auto& t : f.triangles) stair = stair && is_staircase(chart_monomials(G, t.tri));
      literal += stair;
    }
    o.require(count == 1, G.str() + ": " + std::to_string(count) + " fans with G-graph charts");
    o.require(equal, G.str() + ": enumerated G-Hilb differs from Craw-Reid");
    literal_unique += literal == 1;
  }
  o.require(groups.size() == 39, "expected 39 groups up to permutation");
  info(std::to_string(groups.size()) + " groups; with the literal [0,1)-staircase test exactly one fan qualifies for " +
       std::to_string(literal_unique) + " of them");
  return o;
}

Outcome crepant_count() {
  Outcome o;
  auto fg = flop_graph(kZ6);
  o.require(fg.fans.size() == 5, std::to_string(fg.fans.size()) + " fans");
  o.require(fg.edges.size() == 4, std::to_string(fg.edges.size()) + " flops");
  std::set<std::set<support::TriangleKey>> got, want{golden::z6_g_hilb(), golden::z6_z3_over_z2(),
                                                     golden::z6_z2_over_z3(), golden::z6_other_a(),
                                                     golden::z6_other_b()};
  for (const auto& f : fg.fans) got.insert(keys(f, 6));
  o.require(got == want, "fans differ from the figure");
  return o;
}

Outcome stability() {
  Outcome o;
  auto chain = NormalChain::make({kZ6, g3(2, 1, 0, 1)});
  auto fan = iterated_fan(chain);
  auto th = theta_construct(chain, {{Rational(-1), Rational(1)}, {Rational(-2), Rational(1), Rational(1)}});
  o.require(is_generic(th), "Z/6 theta not generic");
  o.require(theta_in_chamber(th, fan), "Z/6 theta outside the chamber");
  auto P = chamber_inequalities(fan);
  std::set<CharMask> S(P.subsets.begin(), P.subsets.end());
  auto mask = [](std::initializer_list<int> labels) {
    CharMask m = 0;
    for (int i : labels) m |= CharMask{1} << kZ6.char_index({i, 0, 0});
    return m;
  };
  // theta_2 < 0, theta_4 < 0, theta_2+theta_5 > 0, theta_1+theta_4 > 0, theta_3 > 0,
  // theta_4+theta_5 > 0, theta_0+theta_1+theta_3 > 0; negative ones via complements.
  for (CharMask m : {mask({0, 1, 3, 4, 5}), mask({0, 1, 2, 3, 5}), mask({2, 5}), mask({1, 4}), mask({3}),
                     mask({4, 5}), mask({0, 1, 3})})
    o.require(S.count(m) == 1, "listed inequality " + mask_str(kZ6, m) + " missing");

  std::mt19937 rng(20261015);
  int chains = 0, trials = 0;
  for (const auto& [G, N] : abelian_sl3_pairs(16)) {
    std::vector<NormalChain> todo{NormalChain::make({G, N})};
    for (const auto& K : subgroups(N))
      if (proper_nontrivial(N, K)) todo.push_back(NormalChain::make({G, N, K}));
    for (const auto& c : todo) {
      ++chains;
      auto P2 = chamber_inequalities(iterated_fan(c));
      for (int trial = 0; trial < 5; ++trial, ++trials) {
        std::vector<std::vector<Rational>> levels{random_theta(rng, c.groups.back().order())};
        for (int i = c.length() - 2; i >= 0; --i)
          levels.push_back(random_theta(rng, c.groups[i].order() / c.groups[i + 1].order()));
        auto t = theta_construct(c, levels);
        o.require(t.regular_value().is_zero(), "theta(R_G) != 0");
        o.require(is_generic(t), "non-generic theta on " + G.str());
        o.require(theta_in_chamber(t, P2), "theta outside the chamber of " + G.str() + " > " + N.str());
      }
    }
  }
  info(std::to_string(chains) + " chains of length 2 and 3, " + std::to_string(trials) + " theta trials");
  return o;
}

Outcome semidirect_tables() {
  Outcome o;
  using R = Rational;
  for (Int n = 4; n <= 12; ++n) {
    auto spec = dihedral_spec(n);
    auto L = irr_table(spec);
    std::vector<Int> want{1, 1};
    for (Int i = 1; 2 * i < n; ++i) want.push_back(2);
    if (n % 2 == 0) want.insert(want.end(), {1, 1});
    o.require(L.dims() == want, "D" + std::to_string(2 * n) + " dimensions");
    // theta_N = (-sum a_i, a_1, ..., a_{n-1}) with a_i = a_{n-i} = i, theta_H = (-b, b).
    std::vector<R> tn(static_cast<std::size_t>(n));
    R sum(0);
    for (Int i = 1; i < n; ++i) {
      tn[i] = R(std::min(i, n - i));
      sum += tn[i];
    }
    tn[0] = -sum;
    const R b(1, 3);
    auto th = theta_semidirect(spec, tn, {-b, b}, true);
    o.require(th.regular_value().is_zero(), "D2n theta(R_G)");
    for (std::size_t k = 0; k < L.irr.size(); ++k) {
      const auto& e = L.irr[k];
      LexRational want_k;
      if (e.orbit == 0) want_k = LexRational({-sum, e.j == 0 ? -b : b});
      else {
        R s(0);
        for (int c : L.orbits[e.orbit].members) s += tn[c];
        want_k = LexRational({s, R(0)});
      }
      o.require(th.entries[k] == want_k, "D" + std::to_string(2 * n) + " theta entry " + e.label());
    }
  }
  auto D = irr_table(parse_semidirect("D8xZ3"));
  o.require(D.dims() == std::vector<Int>{1, 1, 1, 1, 2, 2, 2, 2, 2}, "D8 x| Z/3 dimensions");
  Int sq = 0;
  for (Int d : D.dims()) sq += d * d;
  o.require(sq == 24, "D8 x| Z/3 sum of squares");

  auto spec = parse_semidirect("G12");
  auto G12 = irr_table(spec);
  o.require(G12.dims() == std::vector<Int>{1, 1, 1, 3}, "G12 dimensions");
  const R a1(1), a2(2), a3(3), b(1, 2), s = a1 + a2 + a3;
  auto th = theta_semidirect(spec, {-s, a1, a2, a3}, {-2 * b, b, b});
  o.require(th.entries[0] == LexRational({-s, -2 * b}), "G12 row -sum a_i - 2 eps b");
  o.require(th.entries[1] == LexRational({-s, b}) && th.entries[2] == LexRational({-s, b}), "G12 rows -sum a_i + eps b");
  o.require(th.entries[3] == LexRational({s, R(0)}), "G12 row a_1 + a_2 + a_3");
  return o;
}

Outcome classification() {
  Outcome o;
  int pairs = 0, pairs2d = 0;
  for (const auto& [G, N] : abelian_sl3_pairs(24)) {
    ++pairs;
    auto v = classify_pair(G, N, true);
    o.require(*v.oracle_agreement, "predicate/oracle mismatch on " + G.str() + " > " + N.str());
    o.require(!v.moduli_iso || v.variety_iso, "moduli without variety on " + G.str());
  }
  for (const auto& [G, N] : cyclic_pairs_2d(20)) {
    ++pairs2d;
    auto v = classify_pair(G, N, true);
    o.require(*v.oracle_agreement, "2D mismatch on " + G.str() + " > " + N.str());
  }
  auto a = classify_pair(g3(4, 1, 1, 2), g3(2, 1, 1, 0), true);
  o.require(a.moduli_iso && *a.moduli_oracle, "(1/4(1,1,2), 1/2(1,1,0)) moduli");
  auto b = classify_pair(g3(6, 1, 1, 4), g3(3, 1, 1, 1), true);
  o.require(b.variety_iso && !b.moduli_iso && *b.variety_oracle && !*b.moduli_oracle,
            "(1/6(1,1,4), 1/3(1,1,1)) variety only");
  auto c = classify_pair(g3(12, 1, 5, 6), g3(2, 1, 1, 0), true);
  o.require(c.variety_iso && c.matched_case == IsoCase::case3_a2_mod_4r && *c.variety_oracle,
            "(1/12(1,5,6), 1/2(1,1,0)) case 3");
  o.require(palindromic_continued_fraction(12, 5), "12/5 continued fraction is not palindromic");
  auto d = classify_pair(kZ6, g3(2, 1, 0, 1), true);
  o.require(!d.moduli_iso && !d.variety_iso && !*d.moduli_oracle && !*d.variety_oracle,
            "(1/6(1,2,3), 1/2(1,0,1)) negative");
  info(std::to_string(pairs) + " pairs in SL(3), " + std::to_string(pairs2d) + " pairs in GL(2)");
  return o;
}

Outcome structural() {
  Outcome o;
  const auto pool = abelian_sl3_groups(60);
  std::mt19937 rng(60);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int vertices = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& G = pool[pick(rng)];
    auto f = g_hilb_fan(G);
    o.require(static_cast<Int>(f.triangles.size()) == G.order(), G.str() + ": triangle count");
    for (const auto& t : f.triangles) {
      o.require(t.tri.unimodular(G.order()), G.str() + ": non-unimodular triangle");
      const auto& M = *t.constellation;
      // Skeleton arrows carry the value 1 and must reach every character from the trivial one.
      std::vector<char> reached(M.size(), 0);
      reached[0] = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (const auto& a : skeleton(M)) {
          o.require(arrow_value(M, a) == Vec{0, 0, 0}, G.str() + ": skeleton value");
          int target = G.char_index(M.at(a.source) + unit_vec(a.k));
          if (reached[a.source] && !reached[target]) reached[target] = grew = 1;
        }
      }
      o.require(std::count(reached.begin(), reached.end(), 1) == static_cast<long>(M.size()),
                G.str() + ": skeleton does not span the characters");
      for (const auto& lv : local_coordinates(M))
        for (int j = 0; j < 3; ++j)
          o.require(dot(lv.value, t.tri.v[j]) >= 0, G.str() + ": local coordinate not regular");
    }
    for (auto [p, k] : valencies(f)) {
      ++vertices;
      o.require(k >= 3 && k <= 6, G.str() + ": valency " + std::to_string(k) + " at " + point_str(p, f.den));
    }
    // theta(R_G) = 0 for a nested theta on a random subgroup chain.
    std::vector<AbelianAction> subs;
    for (const auto& N : subgroups(G))
      if (proper_nontrivial(G, N)) subs.push_back(N);
    if (!subs.empty()) {
      const auto& N = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
      auto th = theta_construct(NormalChain::make({G, N}),
                                {random_theta(rng, N.order()), random_theta(rng, G.order() / N.order())});
      o.require(th.regular_value().is_zero(), G.str() + ": theta(R_G) != 0");
    }
  }
  info(std::to_string(vertices) + " fan vertices checked over 200 groups");
  return o;
}

}  // namespace

int main() {
  criterion(1, "golden fans", 1, golden_fans);
  criterion(2, "golden constellations and Omega*Gamma", 1, golden_constellations);
  criterion(3, "unique G-graph fan equals Craw-Reid for |G| <= 12", 60, g_hilb_uniqueness);
  criterion(4, "five crepant fans and four flops for 1/6(1,2,3)", 5, crepant_count);
  criterion(5, "stability: genericity, listed inequalities, chamber sweep", 120, stability);
  criterion(6, "semidirect irreducible tables and theta", 1, semidirect_tables);
  criterion(7, "classification predicates versus oracles", 300, classification);
  criterion(8, "structural invariants over 200 random groups", 120, structural);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
