#include "mckay/hilb_fan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

using Key = std::vector<Simplex>;

Int sgn(Int x) { return (x > 0) - (x < 0); }

// Orientation of three points of the junior plane.  The sign is that of the
// planar orientation up to a global sign shared by every triple.
Int orient(const Vec& a, const Vec& b, const Vec& c) { return sgn(det3(a, b, c)); }

bool is_corner(const Vec& p, Int den) {
  return p[0] == den || p[1] == den || p[2] == den;
}

bool on_segment(const Vec& p, const Vec& a, const Vec& b) {
  if (cross(b - a, p - a) != Vec{0, 0, 0}) return false;
  Int t = dot(b - a, p - a);
  return t >= 0 && t <= dot(b - a, b - a);
}

Edge make_edge(const Vec& a, const Vec& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Simplex tri(Int den, const Vec& a, const Vec& b, const Vec& c) {
  return Simplex::make(3, den, {a, b, c});
}

// -- flips --------------------------------------------------------------------

Key seed_triangulation(const JuniorSimplex& js) {
  const Int den = js.den;
  Key tris{tri(den, js.points[0], js.points[1], js.points[2])};
  for (std::size_t pi = 3; pi < js.points.size(); ++pi) {
    const Vec& p = js.points[pi];
    Key next;
    for (const Simplex& t : tris) {
      Int o = orient(t.v[0], t.v[1], t.v[2]);
      Int b0 = o * orient(p, t.v[1], t.v[2]);
      Int b1 = o * orient(t.v[0], p, t.v[2]);
      Int b2 = o * orient(t.v[0], t.v[1], p);
      if (b0 < 0 || b1 < 0 || b2 < 0) {
        next.push_back(t);
        continue;
      }
      if (b0 > 0) next.push_back(tri(den, p, t.v[1], t.v[2]));
      if (b1 > 0) next.push_back(tri(den, t.v[0], p, t.v[2]));
      if (b2 > 0) next.push_back(tri(den, t.v[0], t.v[1], p));
    }
    tris = std::move(next);
  }
  std::sort(tris.begin(), tris.end());
  return tris;
}

struct FlipInfo {
  Key result;
  std::array<Simplex, 2> removed;
};

std::vector<Key> flip_neighbours(const Key& fan) {
  const Int den = fan.front().den;
  std::map<Edge, std::vector<std::pair<int, Vec>>> by_edge;
  for (int t = 0; t < static_cast<int>(fan.size()); ++t) {
    const auto& v = fan[t].v;
    for (int k = 0; k < 3; ++k)
      by_edge[make_edge(v[(k + 1) % 3], v[(k + 2) % 3])].push_back({t, v[k]});
  }
  std::vector<Key> out;
  for (const auto& [e, opp] : by_edge) {
    if (opp.size() != 2) continue;
    const Vec &a = e.first, &b = e.second, &c = opp[0].second, &d = opp[1].second;
    Int s1 = orient(c, d, a), s2 = orient(c, d, b);
    if (s1 == 0 || s2 == 0 || s1 == s2) continue;
    Key k;
    k.reserve(fan.size());
    for (int t = 0; t < static_cast<int>(fan.size()); ++t)
      if (t != opp[0].first && t != opp[1].first) k.push_back(fan[t]);
    k.push_back(tri(den, a, c, d));
    k.push_back(tri(den, b, c, d));
    std::sort(k.begin(), k.end());
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<Key> flip_search(const Key& seed, Exec exec) {
  std::set<Key> seen{seed};
  std::vector<Key> frontier{seed};
  while (!frontier.empty()) {
    std::vector<std::vector<Key>> found(frontier.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::size_t i = 0; i < frontier.size(); ++i) found[i] = flip_neighbours(frontier[i]);
    } else {
      for (std::size_t i = 0; i < frontier.size(); ++i) found[i] = flip_neighbours(frontier[i]);
    }
    std::vector<Key> next;
    for (auto& list : found)
      for (auto& k : list)
        if (seen.insert(k).second) next.push_back(std::move(k));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// -- Newton boundary ------------------------------------------------------------

struct P2 {
  Int x = 0, y = 0;
  bool operator<(const P2& o) const { return x != o.x ? x < o.x : y < o.y; }
  bool operator==(const P2& o) const { return x == o.x && y == o.y; }
};

Int cross2(P2 a, P2 b) { return a.x * b.y - a.y * b.x; }
P2 sub2(P2 a, P2 b) { return {a.x - b.x, a.y - b.y}; }

// Lower convex boundary of `pts` between the point w on the y-axis and the
// point u on the x-axis, including every point lying on a hull segment.
std::vector<P2> newton_boundary(const std::vector<P2>& pts) {
  std::optional<P2> u, w;
  for (const P2& c : pts) {
    if (c.y == 0 && c.x > 0 && (!u || c.x < u->x)) u = c;
    if (c.x == 0 && c.y > 0 && (!w || c.y < w->y)) w = c;
  }
  if (!u || !w) throw InvariantError("newton_boundary: missing axis points");
  std::vector<P2> cand;
  for (const P2& c : pts)
    if (c.x <= u->x && c.y <= w->y && !(c.x == 0 && c.y == 0)) cand.push_back(c);
  std::sort(cand.begin(), cand.end(), [](P2 a, P2 b) { return a.x != b.x ? a.x < b.x : a.y > b.y; });
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<P2> hull;
  for (const P2& p : cand) {
    while (hull.size() >= 2 &&
           cross2(sub2(hull.back(), hull[hull.size() - 2]), sub2(p, hull[hull.size() - 2])) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  if (!(hull.front() == *w) || !(hull.back() == *u))
    throw InvariantError("newton_boundary: hull does not join the axis points");
  std::vector<P2> full;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    P2 s = hull[h], t = hull[h + 1];
    std::vector<P2> on;
    for (const P2& c : cand)
      if (cross2(sub2(t, s), sub2(c, s)) == 0 && std::min(s.x, t.x) <= c.x &&
          c.x <= std::max(s.x, t.x) && std::min(s.y, t.y) <= c.y && c.y <= std::max(s.y, t.y))
        on.push_back(c);
    std::sort(on.begin(), on.end());
    for (const P2& c : on)
      if (full.empty() || !(full.back() == c)) full.push_back(c);
  }
  return full;
}

Int boundary_label(P2 prev, P2 mid, P2 next) {
  P2 s{prev.x + next.x, prev.y + next.y};
  Int b = mid.x != 0 ? s.x / mid.x : s.y / mid.y;
  if (b * mid.x != s.x || b * mid.y != s.y)
    throw InvariantError("newton_boundary: neighbouring points violate the label recursion");
  return b;
}

// -- Craw-Reid line extents -----------------------------------------------------

class ExtentSolver {
 public:
  explicit ExtentSolver(std::vector<CrawReidLine>& lines) : L_(lines), ext_(lines.size(), 0) {
    std::map<Vec, std::vector<std::pair<int, int>>> at;
    for (int j = 0; j < static_cast<int>(L_.size()); ++j)
      for (int k = 0; k < static_cast<int>(L_[j].path.size()); ++k) at[L_[j].path[k]].push_back({j, k});
    meet_.resize(L_.size());
    for (int i = 0; i < static_cast<int>(L_.size()); ++i)
      for (const Vec& q : L_[i].path) {
        std::vector<std::pair<int, int>> m;
        for (auto [j, k] : at[q])
          if (L_[j].corner != L_[i].corner) m.push_back({j, k});
        meet_[i].push_back(std::move(m));
      }
  }

  // Extents with the stopping rule satisfied and no two lines from
  // different corners passing through a common point; must be unique.
  std::vector<int> solve() {
    rec(0);
    if (solutions_.size() != 1)
      throw InvariantError("craw_reid: expected a unique consistent set of line extents, found " +
                           std::to_string(solutions_.size()));
    return solutions_.front();
  }

 private:
  std::vector<CrawReidLine>& L_;
  std::vector<int> ext_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> meet_;
  std::vector<std::vector<int>> solutions_;

  // Bounds on the number of other-corner lines drawn through path points
  // 0..k of line i, over all completions of the current partial assignment.
  std::pair<Int, Int> cum_bounds(int i, int k) const {
    Int lo = 0, hi = 0;
    for (int kk = 0; kk <= k; ++kk)
      for (auto [j, pj] : meet_[i][kk]) {
        if (ext_[j]) {
          Int c = pj < ext_[j] ? 1 : 0;
          lo += c;
          hi += c;
        } else {
          hi += 1;
          lo += pj == 0 ? 1 : 0;
        }
      }
    return {lo, hi};
  }

  bool consistent(int i) const {
    const int e = ext_[i];
    const Int need = L_[i].label - 1;
    for (int k = 0; k + 1 < e; ++k)
      if (cum_bounds(i, k).first >= need) return false;
    if (e < static_cast<int>(L_[i].path.size()) && cum_bounds(i, e - 1).second < need) return false;
    return true;
  }

  bool crosses(int i) const {
    for (int k = 0; k + 1 < ext_[i]; ++k)
      for (auto [j, pj] : meet_[i][k])
        if (j != i && ext_[j] && pj + 1 < ext_[j]) return true;
    return false;
  }

  void rec(int i) {
    if (solutions_.size() > 1) return;
    if (i == static_cast<int>(L_.size())) {
      solutions_.push_back(ext_);
      return;
    }
    for (int e = 1; e <= static_cast<int>(L_[i].path.size()); ++e) {
      ext_[i] = e;
      if (crosses(i)) continue;
      bool ok = true;
      for (int j = 0; j <= i && ok; ++j) ok = consistent(j);
      if (ok) rec(i + 1);
    }
    ext_[i] = 0;
  }
};

// -- faces of the line arrangement ---------------------------------------------

int angle_class(Int x, Int y) {
  if (y < 0) return 0;
  if (y == 0 && x > 0) return 1;
  if (y > 0) return 2;
  return 3;
}

bool angle_less(P2 a, P2 b) {
  int qa = angle_class(a.x, a.y), qb = angle_class(b.x, b.y);
  if (qa != qb) return qa < qb;
  return cross2(a, b) > 0;
}

P2 proj(const Vec& p) { return {p[0], p[1]}; }

std::vector<std::vector<Vec>> planar_faces(const std::vector<Vec>& points,
                                           const std::vector<Edge>& segments) {
  std::map<Vec, std::set<Vec>> adj;
  for (const Vec& p : points) adj[p];
  for (const auto& [a, b] : segments) {
    std::vector<Vec> on;
    for (const Vec& p : points)
      if (on_segment(p, a, b)) on.push_back(p);
    std::sort(on.begin(), on.end(),
              [&](const Vec& p, const Vec& q) { return dot(p - a, b - a) < dot(q - a, b - a); });
    for (std::size_t k = 0; k + 1 < on.size(); ++k) {
      adj[on[k]].insert(on[k + 1]);
      adj[on[k + 1]].insert(on[k]);
    }
  }
  std::map<Vec, std::vector<Vec>> nbr;
  for (const auto& [p, s] : adj) {
    std::vector<Vec> l(s.begin(), s.end());
    std::sort(l.begin(), l.end(), [&](const Vec& a, const Vec& b) {
      return angle_less(sub2(proj(a), proj(p)), sub2(proj(b), proj(p)));
    });
    nbr[p] = std::move(l);
  }
  std::set<std::pair<Vec, Vec>> seen;
  std::vector<std::vector<Vec>> faces;
  for (const auto& [u, s] : adj)
    for (const Vec& v : s) {
      if (seen.count({u, v})) continue;
      std::vector<Vec> face;
      Vec a = u, b = v;
      while (!seen.count({a, b})) {
        seen.insert({a, b});
        face.push_back(a);
        const auto& l = nbr[b];
        auto it = std::find(l.begin(), l.end(), a);
        std::size_t idx = static_cast<std::size_t>(it - l.begin());
        Vec c = l[(idx + l.size() - 1) % l.size()];
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  return faces;
}

Int face_area2(const std::vector<Vec>& f) {
  Int s = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Vec& a = f[k];
    const Vec& b = f[(k + 1) % f.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return s;
}

std::vector<Simplex> regular_tessellation(const RegularTriangle& rt, Int den) {
  const Int r = rt.side;
  const auto& [A, B, C] = rt.corners;
  auto P = [&](Int i, Int j) {
    Vec v = (r - i - j) * A + i * B + j * C;
    for (Int& x : v) {
      if (x % r != 0) throw InvariantError("craw_reid: regular triangle has non-lattice points");
      x /= r;
    }
    return v;
  };
  std::vector<Simplex> out;
  for (Int i = 0; i < r; ++i)
    for (Int j = 0; j < r - i; ++j) {
      out.push_back(tri(den, P(i, j), P(i + 1, j), P(i, j + 1)));
      if (i + j < r - 1) out.push_back(tri(den, P(i + 1, j), P(i, j + 1), P(i + 1, j + 1)));
    }
  return out;
}

std::vector<Simplex> triangles_with_g_graphs(const AbelianAction& G, Exec exec) {
  auto js = junior_points(G);
  const auto& pts = js.points;
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<Simplex>> per(static_cast<std::size_t>(n));
  auto work = [&](int i) {
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Simplex s = tri(js.den, pts[i], pts[j], pts[k]);
        if (s.unimodular(G.order()) && g_graph(G, s)) per[i].push_back(s);
      }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) work(i);
  } else {
    for (int i = 0; i < n; ++i) work(i);
  }
  std::vector<Simplex> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

Fan attach_g_graphs(Fan fan) {
  for (auto& t : fan.triangles) {
    auto M = g_graph(fan.group, t.tri);
    if (!M)
      throw InvariantError("G-Hilb chart " + point_str(t.tri.v[0], t.tri.den) + " " +
                           point_str(t.tri.v[1], t.tri.den) + " " +
                           point_str(t.tri.v[2], t.tri.den) + " has no G-graph");
    t.constellation = std::move(*M);
  }
  return fan;
}

}  // namespace

// -- Fan ------------------------------------------------------------------------

std::vector<Simplex> Fan::simplices() const {
  std::vector<Simplex> out;
  out.reserve(triangles.size());
  for (const auto& t : triangles) out.push_back(t.tri);
  return out;
}

std::vector<Edge> Fan::edges() const {
  std::set<Edge> s;
  for (const auto& t : triangles) {
    if (t.tri.dim == 2) {
      s.insert(make_edge(Vec{0, 0, 0}, t.tri.v[0]));
      s.insert(make_edge(Vec{0, 0, 0}, t.tri.v[1]));
      continue;
    }
    for (int k = 0; k < 3; ++k) s.insert(make_edge(t.tri.v[k], t.tri.v[(k + 1) % 3]));
  }
  return {s.begin(), s.end()};
}

bool Fan::same_triangles(const Fan& o) const { return simplices() == o.simplices(); }

Fan make_fan(const AbelianAction& G, std::vector<Simplex> simplices, int step) {
  std::sort(simplices.begin(), simplices.end());
  Fan f;
  f.group = G;
  f.den = simplices.empty() ? G.exponent() : simplices.front().den;
  for (auto& s : simplices) f.triangles.push_back({s, step, std::nullopt});
  return f;
}

void check_crepant(const Fan& fan) {
  const auto& G = fan.group;
  const Int den = fan.den;
  if (fan.triangles.empty()) throw InvariantError("fan has no cones");
  for (const auto& t : fan.triangles) {
    if (t.tri.den != den) throw InvariantError("fan cones use different denominators");
    if (!t.tri.unimodular(G.order())) throw InvariantError("fan cone is not unimodular");
    for (int k = 0; k < t.tri.dim; ++k)
      if (!G.contains_point(t.tri.v[k], den)) throw InvariantError("fan vertex is not in L");
  }
  if (G.dim() == 2) {
    // Cones must form a chain from the y-axis to the x-axis.
    std::vector<std::array<Vec, 2>> cones;
    for (const auto& t : fan.triangles) {
      Vec a = t.tri.v[0], b = t.tri.v[1];
      if (a[0] * b[1] - a[1] * b[0] < 0) std::swap(a, b);
      cones.push_back({b, a});  // clockwise: from the y-axis side to the x-axis side
    }
    std::sort(cones.begin(), cones.end(), [](const auto& p, const auto& q) {
      return p[0][0] * q[0][1] - p[0][1] * q[0][0] < 0;
    });
    if (cones.front()[0][0] != 0 || cones.back()[1][1] != 0)
      throw InvariantError("2D fan does not span the positive quadrant");
    for (std::size_t k = 0; k + 1 < cones.size(); ++k)
      if (cones[k][1] != cones[k + 1][0]) throw InvariantError("2D fan cones do not abut");
    return;
  }
  if (static_cast<Int>(fan.triangles.size()) != G.order())
    throw InvariantError("fan has " + std::to_string(fan.triangles.size()) +
                         " triangles, expected |G| = " + std::to_string(G.order()));
  std::map<Edge, std::vector<Vec>> opp;
  for (const auto& t : fan.triangles)
    for (int k = 0; k < 3; ++k)
      opp[make_edge(t.tri.v[(k + 1) % 3], t.tri.v[(k + 2) % 3])].push_back(t.tri.v[k]);
  for (const auto& [e, o] : opp) {
    bool boundary = false;
    for (int k = 0; k < 3; ++k)
      if (e.first[k] == 0 && e.second[k] == 0) boundary = true;
    if (boundary) {
      if (o.size() != 1) throw InvariantError("boundary edge not covered exactly once");
    } else {
      if (o.size() != 2) throw InvariantError("interior edge not shared by exactly two triangles");
      if (orient(e.first, e.second, o[0]) == orient(e.first, e.second, o[1]))
        throw InvariantError("triangles overlap across an interior edge");
    }
  }
}

std::vector<Fan> enumerate_crepant_fans(const AbelianAction& G, Int bound, Exec exec) {
  if (G.dim() != 3) throw InputError("enumerate_crepant_fans requires a 3-dimensional group");
  if (bound < 1) throw InputError("enumeration bound must be at least 1");
  if (G.order() > bound)
    throw InputError("|G| = " + std::to_string(G.order()) + " exceeds the enumeration bound " +
                     std::to_string(bound));
  auto keys = flip_search(seed_triangulation(junior_points(G)), exec);
  std::vector<Fan> out;
  out.reserve(keys.size());
  for (auto& k : keys) out.push_back(make_fan(G, std::move(k)));
  return out;
}

FlopGraph flop_graph(const AbelianAction& G, Int bound, Exec exec) {
  FlopGraph g;
  g.fans = enumerate_crepant_fans(G, bound, exec);
  std::vector<Key> keys;
  for (const auto& f : g.fans) keys.push_back(f.simplices());
  for (int i = 0; i < static_cast<int>(keys.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(keys.size()); ++j) {
      std::vector<Simplex> common;
      std::set_intersection(keys[i].begin(), keys[i].end(), keys[j].begin(), keys[j].end(),
                            std::back_inserter(common));
      if (common.size() + 2 == keys[i].size()) g.edges.push_back({i, j});
    }
  return g;
}

CrawReidTrace craw_reid(const AbelianAction& G) {
  auto js = junior_points(G);
  const Int R = js.den;
  CrawReidTrace tr;
  tr.den = R;
  for (int i = 0; i < 3; ++i) {
    const Vec ei = R * unit_vec(i);
    const int o0 = (i + 1) % 3 < (i + 2) % 3 ? (i + 1) % 3 : (i + 2) % 3;
    const int o1 = 3 - i - o0;
    std::map<P2, Vec> back;
    std::vector<P2> c2;
    for (const Vec& p : js.points) {
      if (p == ei) continue;
      P2 q{p[o0], p[o1]};
      c2.push_back(q);
      back[q] = p;
    }
    auto full = newton_boundary(c2);
    for (std::size_t k = 1; k + 1 < full.size(); ++k) {
      CrawReidLine line;
      line.corner = i;
      line.label = boundary_label(full[k - 1], full[k], full[k + 1]);
      const Vec p = back.at(full[k]);
      const Vec d = p - ei;
      for (Vec q = p; q[0] >= 0 && q[1] >= 0 && q[2] >= 0; q = q + d) line.path.push_back(q);
      tr.lines.push_back(std::move(line));
    }
  }
  auto ext = ExtentSolver(tr.lines).solve();
  std::vector<Edge> segments{{R * unit_vec(0), R * unit_vec(1)},
                             {R * unit_vec(1), R * unit_vec(2)},
                             {R * unit_vec(2), R * unit_vec(0)}};
  for (std::size_t l = 0; l < tr.lines.size(); ++l) {
    tr.lines[l].extent = ext[l];
    segments.push_back({R * unit_vec(tr.lines[l].corner), tr.lines[l].path[ext[l] - 1]});
  }

  for (const auto& f : planar_faces(js.points, segments)) {
    if (face_area2(f) <= 0) continue;
    std::vector<Vec> corners;
    const std::size_t n = f.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Vec& a = f[(k + n - 1) % n];
      const Vec& b = f[k];
      const Vec& c = f[(k + 1) % n];
      if (cross(b - a, c - b) != Vec{0, 0, 0}) corners.push_back(b);
    }
    if (corners.size() != 3) throw InvariantError("craw_reid: a region is not a triangle");
    std::array<Int, 3> sides{};
    for (int s = 0; s < 3; ++s) {
      Int cnt = 0;
      for (const Vec& p : f)
        if (on_segment(p, corners[s], corners[(s + 1) % 3])) ++cnt;
      sides[s] = cnt - 1;
    }
    if (sides[0] != sides[1] || sides[1] != sides[2])
      throw InvariantError("craw_reid: a region is not a regular triangle");
    RegularTriangle rt{{corners[0], corners[1], corners[2]}, sides[0]};
    auto t = regular_tessellation(rt, R);
    tr.triangles.insert(tr.triangles.end(), t.begin(), t.end());
    tr.regions.push_back(rt);
  }
  std::sort(tr.triangles.begin(), tr.triangles.end());
  return tr;
}

Fan g_hilb_fan(const AbelianAction& G) {
  if (G.dim() == 2) return g_hilb_fan_2d(G);
  if (!G.sl()) {
    for (const auto& e : G.elements())
      if ((e[0] + e[1] + e[2]) % G.exponent() != 0)
        throw InputError("g_hilb_fan requires a subgroup of SL(3)");
  }
  auto tr = craw_reid(G);
  Fan f = make_fan(G, tr.triangles);
  check_crepant(f);
  return attach_g_graphs(std::move(f));
}

Fan g_hilb_fan_scan(const AbelianAction& G, Exec exec) {
  auto tris = triangles_with_g_graphs(G, exec);
  if (static_cast<Int>(tris.size()) != G.order())
    throw InvariantError("g_hilb_fan_scan: " + std::to_string(tris.size()) +
                         " charts have G-graphs, expected |G| = " + std::to_string(G.order()));
  Fan f = make_fan(G, tris);
  check_crepant(f);
  return attach_g_graphs(std::move(f));
}

bool all_charts_have_g_graphs(const Fan& fan) {
  for (const auto& t : fan.triangles)
    if (!g_graph(fan.group, t.tri)) return false;
  return true;
}

Fan g_hilb_fan_by_enumeration(const AbelianAction& G, Int bound, Exec exec) {
  auto fans = enumerate_crepant_fans(G, bound, exec);
  std::map<Simplex, bool> good;
  for (const auto& f : fans)
    for (const auto& t : f.triangles)
      if (!good.count(t.tri)) good[t.tri] = g_graph(G, t.tri).has_value();
  std::vector<const Fan*> hits;
  for (const auto& f : fans) {
    bool all = true;
    for (const auto& t : f.triangles) all = all && good[t.tri];
    if (all) hits.push_back(&f);
  }
  if (hits.size() != 1)
    throw InvariantError("expected exactly one crepant fan with G-graph charts, found " +
                         std::to_string(hits.size()));
  return attach_g_graphs(*hits.front());
}

std::map<Vec, int> valencies(const Fan& fan) {
  std::map<Vec, int> out;
  for (const auto& [a, b] : fan.edges()) {
    if (!is_corner(a, fan.den)) ++out[a];
    if (!is_corner(b, fan.den)) ++out[b];
  }
  return out;
}

PointGraph dual_graph(const Fan& fan) {
  PointGraph g;
  g.den = fan.den;
  std::set<Vec> nodes;
  for (const auto& t : fan.triangles)
    for (int k = 0; k < t.tri.dim; ++k)
      if (!is_corner(t.tri.v[k], fan.den)) nodes.insert(t.tri.v[k]);
  g.nodes.assign(nodes.begin(), nodes.end());
  auto idx = [&](const Vec& p) {
    return static_cast<int>(std::lower_bound(g.nodes.begin(), g.nodes.end(), p) - g.nodes.begin());
  };
  for (const auto& [a, b] : fan.edges())
    if (nodes.count(a) && nodes.count(b)) g.edges.push_back({idx(a), idx(b)});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// -- dimension two -----------------------------------------------------------------

std::vector<Int> hj_continued_fraction(Int p, Int q) {
  if (p <= 0 || q <= 0 || q >= p || std::gcd(p, q) != 1)
    throw InputError("continued fraction requires p > q > 0 coprime");
  std::vector<Int> out;
  while (q > 0) {
    Int b = (p + q - 1) / q;
    out.push_back(b);
    Int nq = b * q - p;
    p = q;
    q = nq;
  }
  return out;
}

HJResolution hj_minimal_resolution_2d(Int r, Int a) {
  if (r < 2 || a <= 0 || a >= r || std::gcd(r, a) != 1)
    throw InputError("1/" + std::to_string(r) + "(1," + std::to_string(a) +
                     ") is not a small cyclic group");
  HJResolution h;
  h.r = r;
  h.a = a;
  h.coefficients = hj_continued_fraction(r, a);
  h.rays = {Vec{0, r, 0}, Vec{1, a, 0}};
  for (Int b : h.coefficients) {
    const Vec& v = h.rays.back();
    const Vec& u = h.rays[h.rays.size() - 2];
    h.rays.push_back(b * v - u);
  }
  if (h.rays.back() != Vec{r, 0, 0})
    throw InvariantError("Hirzebruch-Jung chain does not end on the x-axis");
  for (std::size_t k = 0; k + 1 < h.rays.size(); ++k) {
    auto ch = chart_coordinates(Simplex::make(2, r, {h.rays[k], h.rays[k + 1], Vec{0, 0, 0}}));
    h.chart_coordinates.push_back({ch.coords[0], ch.coords[1]});
  }
  return h;
}

Fan g_hilb_fan_2d(const AbelianAction& G) {
  if (G.dim() != 2) throw InputError("g_hilb_fan_2d requires a 2-dimensional group");
  const Int R = G.exponent();
  std::vector<P2> pts;
  for (Int x = 0; x <= R; ++x)
    for (Int y = 0; y <= R; ++y)
      if ((x || y) && G.contains_point({x, y, 0}, R)) pts.push_back({x, y});
  auto full = newton_boundary(pts);
  std::vector<Simplex> cones;
  for (std::size_t k = 0; k + 1 < full.size(); ++k)
    cones.push_back(Simplex::make(2, R, {Vec{full[k].x, full[k].y, 0},
                                         Vec{full[k + 1].x, full[k + 1].y, 0}, Vec{0, 0, 0}}));
  Fan f = make_fan(G, cones);
  check_crepant(f);
  return attach_g_graphs(std::move(f));
}

Fan g_hilb_fan_any(const AbelianAction& G) {
  return G.dim() == 2 ? g_hilb_fan_2d(G) : g_hilb_fan(G);
}

}  // namespace mckay
