#include <doctest.h>

#include <map>
#include <set>

#include "golden.hpp"
#include "mckay/classify.hpp"
#include "mckay/errors.hpp"
#include "mckay/hilb_fan.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mckay;
using support::g2;
using support::g3;
using support::keys;

TEST_CASE("G-Hilb golden fans") {
  CHECK(keys(g_hilb_fan(g3(2, 1, 0, 1)), 2) == golden::half_101());
  CHECK(keys(g_hilb_fan(g3(6, 1, 2, 3)), 6) == golden::z6_g_hilb());
}

TEST_CASE("G-Hilb of the trivial group is the junior simplex") {
  auto f = g_hilb_fan(AbelianAction());
  REQUIRE(f.triangles.size() == 1);
  CHECK(f.triangles[0].tri.v[0] == Vec{f.den, 0, 0});
}

TEST_CASE("crepant fans and flops of 1/6(1,2,3)") {
  auto G = g3(6, 1, 2, 3);
  auto fg = flop_graph(G);
  REQUIRE(fg.fans.size() == 5);
  CHECK(fg.edges.size() == 4);

  const std::vector<std::set<support::TriangleKey>> named{golden::z6_g_hilb(), golden::z6_z3_over_z2(),
                                                          golden::z6_z2_over_z3(), golden::z6_other_a(),
                                                          golden::z6_other_b()};
  std::vector<int> which;
  for (const auto& f : fg.fans) {
    int w = -1;
    for (int i = 0; i < 5; ++i)
      if (keys(f, 6) == named[i]) w = i;
    REQUIRE(w >= 0);
    which.push_back(w);
  }
  std::set<std::pair<int, int>> flops;
  for (auto [a, b] : fg.edges) flops.insert(std::minmax(which[a], which[b]));
  CHECK(flops == std::set<std::pair<int, int>>{{0, 3}, {0, 2}, {0, 4}, {1, 4}});
}

TEST_CASE("enumeration agrees with the exact-cover oracle") {
  for (const auto& G : {g3(2, 1, 0, 1), g3(3, 1, 1, 1), g3(4, 1, 1, 2), g3(4, 1, 3, 0), g3(5, 1, 1, 3),
                        g3(6, 1, 2, 3), g3(6, 1, 1, 4), g3(7, 1, 2, 4), g3(8, 1, 2, 5),
                        g3({{2, {1, 1, 0}}, {2, {1, 0, 1}}})}) {
    std::set<std::vector<Simplex>> mine, ref;
    for (const auto& f : enumerate_crepant_fans(G)) mine.insert(f.simplices());
    for (auto t : oracle::exact_cover_triangulations(G)) {
      std::sort(t.begin(), t.end());
      ref.insert(t);
    }
    CHECK_MESSAGE(mine == ref, G.str());
  }
}

TEST_CASE("1/7(1,2,4) has a unique crepant resolution") {
  CHECK(enumerate_crepant_fans(g3(7, 1, 2, 4)).size() == 1);
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate_crepant_fans(g3(13, 1, 3, 9)), InputError);
  CHECK_THROWS_AS(enumerate_crepant_fans(g3(6, 1, 2, 3), 0), InputError);
  CHECK_NOTHROW(enumerate_crepant_fans(g3(13, 1, 3, 9), 13));
}

TEST_CASE("serial and parallel kernels agree") {
  for (const auto& G : {g3(6, 1, 2, 3), g3(10, 1, 2, 7), g3(12, 1, 2, 9), g3({{3, {1, 2, 0}}, {3, {0, 1, 2}}})}) {
    auto a = enumerate_crepant_fans(G, 12, Exec::serial);
    auto b = enumerate_crepant_fans(G, 12, Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].simplices() == b[i].simplices());
    CHECK(g_hilb_fan_scan(G, Exec::serial).simplices() == g_hilb_fan_scan(G, Exec::parallel).simplices());
  }
}

TEST_CASE("Craw-Reid agrees with the G-graph scan") {
  for (const auto& G : abelian_sl3_groups(30)) {
    auto a = g_hilb_fan(G);
    CHECK_MESSAGE(a.same_triangles(g_hilb_fan_scan(G)), G.str());
    CHECK(static_cast<Int>(a.triangles.size()) == G.order());
    CHECK(all_charts_have_g_graphs(a));
  }
}

TEST_CASE("G-Hilb is the only enumerated fan with G-graph charts") {
  for (const auto& G : abelian_sl3_groups(8)) {
    int count = 0;
    for (const auto& f : enumerate_crepant_fans(G))
      if (all_charts_have_g_graphs(f)) {
        ++count;
        CHECK(f.same_triangles(g_hilb_fan(G)));
      }
    CHECK_MESSAGE(count == 1, G.str());
    CHECK(g_hilb_fan_by_enumeration(G).same_triangles(g_hilb_fan(G)));
  }
}

TEST_CASE("Craw-Reid trace") {
  auto tr = craw_reid(g3(6, 1, 2, 3));
  CHECK(tr.den == 6);
  CHECK(tr.triangles.size() == 6);
  for (const auto& l : tr.lines) {
    CHECK(l.corner >= 0);
    CHECK(l.corner < 3);
    CHECK(l.extent <= static_cast<int>(l.path.size()));
  }
}

TEST_CASE("valencies and the dual graph of 1/6(1,2,3)") {
  auto f = g_hilb_fan(g3(6, 1, 2, 3));
  auto v = valencies(f);
  CHECK(v == std::map<Vec, int>{{Vec{1, 2, 3}, 5}, {Vec{2, 4, 0}, 3}, {Vec{3, 0, 3}, 4}, {Vec{4, 2, 0}, 4}});
  auto dg = dual_graph(f);
  CHECK(dg.nodes.size() == 4);
  CHECK(dg.edges.size() == 5);  // includes the boundary segment 1/3(2,1,0)-1/3(1,2,0)
}

TEST_CASE("valencies stay between 3 and 6") {
  for (const auto& G : abelian_sl3_groups(24))
    for (auto [p, k] : valencies(g_hilb_fan(G))) {
      CHECK(k >= 3);
      CHECK(k <= 6);
    }
}

TEST_CASE("crepancy check rejects a partial fan") {
  auto f = g_hilb_fan(g3(6, 1, 2, 3));
  auto tris = f.simplices();
  tris.pop_back();
  CHECK_THROWS_AS(check_crepant(make_fan(f.group, tris)), InvariantError);
  CHECK_NOTHROW(check_crepant(f));
}

TEST_CASE("Hirzebruch-Jung continued fractions") {
  CHECK(hj_continued_fraction(5, 2) == std::vector<Int>{3, 2});
  CHECK(hj_continued_fraction(7, 3) == std::vector<Int>{3, 2, 2});
  CHECK(hj_continued_fraction(5, 4) == std::vector<Int>{2, 2, 2, 2});
  CHECK(hj_continued_fraction(4, 1) == std::vector<Int>{4});
  CHECK_THROWS_AS(hj_continued_fraction(6, 3), InputError);
}

TEST_CASE("two-dimensional G-Hilb is the minimal resolution") {
  for (Int r = 2; r <= 20; ++r)
    for (Int a = 1; a < r; ++a) {
      if (std::gcd(r, a) != 1) continue;
      auto G = g2(r, 1, a);
      auto f = g_hilb_fan_2d(G);
      auto hj = hj_minimal_resolution_2d(r, a);
      CHECK(f.triangles.size() == hj.rays.size() - 1);
      std::set<std::vector<Vec>> mine, ref;
      for (const auto& t : f.triangles) mine.insert(support::key(t.tri, r));
      for (std::size_t i = 0; i + 1 < hj.rays.size(); ++i) {
        std::vector<Vec> k{hj.rays[i], hj.rays[i + 1]};
        std::sort(k.rbegin(), k.rend());
        ref.insert(k);
      }
      CHECK_MESSAGE(mine == ref, G.str());
      CHECK(hj.coefficients.size() == hj.rays.size() - 2);
      CHECK(all_charts_have_g_graphs(f));
    }
}

TEST_CASE("dimension dispatch") {
  CHECK(g_hilb_fan_any(g2(5, 1, 2)).triangles.size() == 3);
  CHECK(g_hilb_fan_any(g3(6, 1, 2, 3)).triangles.size() == 6);
  CHECK_THROWS_AS(g_hilb_fan_2d(g3(6, 1, 2, 3)), InputError);
}
