#pragma once

// Crepant fans of the junior simplex: exhaustive enumeration by bistellar
// flips, the flop graph, the G-Hilb fan (Craw-Reid construction with a
// G-graph check of every chart), and the two-dimensional cyclic case.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mckay/constellations.hpp"
#include "mckay/exec.hpp"
#include "mckay/lattice_core.hpp"

namespace mckay {

using Edge = std::pair<Vec, Vec>;  // endpoints scaled by the fan's denominator, first < second

struct FanTriangle {
  Simplex tri;
  int step = 1;  // chain step that created the triangle
  std::optional<MonomialSet> constellation;
};

struct EdgeStep {
  Edge edge;
  int step = 1;
};

struct Fan {
  AbelianAction group;
  Int den = 1;
  std::vector<FanTriangle> triangles;  // sorted by simplex
  std::vector<EdgeStep> edge_steps;    // empty unless produced by an iterated construction

  std::vector<Simplex> simplices() const;
  std::vector<Edge> edges() const;  // sorted, unique
  bool same_triangles(const Fan& other) const;
};

Fan make_fan(const AbelianAction& G, std::vector<Simplex> simplices, int step = 1);

// Throws InvariantError unless the fan is a unimodular triangulation of the
// junior simplex (or of the positive quadrant in dimension 2).
void check_crepant(const Fan& fan);

inline constexpr Int kDefaultEnumerationBound = 12;

// All unimodular triangulations of the junior simplex, in increasing order of
// their sorted triangle lists.  Throws InputError when |G| exceeds `bound`.
std::vector<Fan> enumerate_crepant_fans(const AbelianAction& G,
                                        Int bound = kDefaultEnumerationBound,
                                        Exec exec = Exec::parallel);

struct FlopGraph {
  std::vector<Fan> fans;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

// Nodes are the crepant fans; an edge joins two fans related by one flip.
FlopGraph flop_graph(const AbelianAction& G, Int bound = kDefaultEnumerationBound,
                     Exec exec = Exec::parallel);

// Trace of the Craw-Reid construction, kept for inspection and export.
struct CrawReidLine {
  int corner = 0;  // the line starts at e_corner
  Int label = 0;   // self-intersection label of the Newton boundary point
  std::vector<Vec> path;
  int extent = 0;  // number of path points actually drawn
};

struct RegularTriangle {
  std::array<Vec, 3> corners;
  Int side = 1;  // number of lattice steps per side
};

struct CrawReidTrace {
  Int den = 1;
  std::vector<CrawReidLine> lines;
  std::vector<RegularTriangle> regions;
  std::vector<Simplex> triangles;
};

CrawReidTrace craw_reid(const AbelianAction& G);

// G-Hilb fan via Craw-Reid.  Every triangle is verified to be unimodular
// with a G-graph chart; the chart's G-graph is attached as its constellation.
Fan g_hilb_fan(const AbelianAction& G);

// G-Hilb fan as the set of all unimodular junior triangles whose chart has a
// G-graph.  Independent of Craw-Reid; exactly |G| triangles must pass.
Fan g_hilb_fan_scan(const AbelianAction& G, Exec exec = Exec::parallel);

// The unique enumerated crepant fan all of whose charts have G-graphs.
// Throws InvariantError if there is none or more than one.
Fan g_hilb_fan_by_enumeration(const AbelianAction& G, Int bound = kDefaultEnumerationBound,
                              Exec exec = Exec::parallel);

bool all_charts_have_g_graphs(const Fan& fan);

// Number of fan edges at each non-corner point of the fan.
std::map<Vec, int> valencies(const Fan& fan);

struct PointGraph {
  Int den = 1;
  std::vector<Vec> nodes;
  std::vector<std::pair<int, int>> edges;
};

// Non-corner junior points and the fan edges joining two of them.
PointGraph dual_graph(const Fan& fan);

// -- Dimension two -----------------------------------------------------------

struct HJResolution {
  Int r = 1, a = 1;
  std::vector<Int> coefficients;  // r/a = b_1 - 1/(b_2 - ...)
  std::vector<Vec> rays;          // scaled by r, from (0,r) to (r,0)
  std::vector<std::array<Vec, 2>> chart_coordinates;  // per cone
};

// Minimal resolution of C^2 / (1/r(1,a)).  Requires gcd(r, a) = 1.
HJResolution hj_minimal_resolution_2d(Int r, Int a);

// Hirzebruch-Jung continued fraction of p/q (p > q > 0, gcd 1).
std::vector<Int> hj_continued_fraction(Int p, Int q);

// G-Hilb of a two-dimensional diagonal group: the cones between consecutive
// vertices of the Newton boundary of L in the positive quadrant.  Each cone is
// verified to be unimodular with a G-graph chart.
Fan g_hilb_fan_2d(const AbelianAction& G);

// Dimension-dispatching G-Hilb.
Fan g_hilb_fan_any(const AbelianAction& G);

}  // namespace mckay
