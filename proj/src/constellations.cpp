#include "mckay/constellations.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool regular_on(const Vec& m, const Simplex& s) {
  for (int j = 0; j < s.dim; ++j)
    if (dot(m, s.v[j]) < 0) return false;
  return true;
}

}  // namespace

std::vector<Vec> MonomialSet::sorted() const {
  std::vector<Vec> out = mono;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> MonomialSet::rendered() const {
  std::vector<std::string> out;
  out.reserve(mono.size());
  for (const auto& m : mono) out.push_back(laurent_str(m, simplex.dim));
  return out;
}

MonomialSet chart_monomials(const AbelianAction& G, const Simplex& s) {
  Chart ch = chart_coordinates(s);
  MonomialSet M{G, s, {}};
  M.mono.resize(static_cast<std::size_t>(G.num_chars()));
  for (int c = 0; c < G.num_chars(); ++c) {
    Vec m = G.char_representative(c);
    Vec lam = m;
    for (int j = 0; j < s.dim; ++j) lam = lam - floor_div(dot(m, s.v[j]), s.den) * ch.coords[j];
    for (int j = 0; j < s.dim; ++j) {
      Int p = dot(lam, s.v[j]);
      if (p < 0 || p >= s.den)
        throw InvariantError("chart_monomials: reduction left the [0,1) box");
    }
    M.mono[static_cast<std::size_t>(c)] = lam;
  }
  return M;
}

std::optional<MonomialSet> g_graph(const AbelianAction& G, const Simplex& s) {
  const int n = s.dim;
  Vec w{0, 0, 0};
  for (int j = 0; j < n; ++j) w = w + s.v[j];

  using Item = std::pair<Int, Vec>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  std::vector<char> done(static_cast<std::size_t>(G.num_chars()), 0);
  std::vector<Vec> best(static_cast<std::size_t>(G.num_chars()));
  std::vector<Int> dist(static_cast<std::size_t>(G.num_chars()), 0);
  int ndone = 0;
  pq.push({0, Vec{0, 0, 0}});
  while (!pq.empty()) {
    auto [d, m] = pq.top();
    pq.pop();
    int c = G.char_index(m);
    if (done[c]) {
      if (best[c] != m && dist[c] == d) return std::nullopt;  // tied minimum
      continue;
    }
    done[c] = 1;
    best[c] = m;
    dist[c] = d;
    ++ndone;
    for (int k = 0; k < n; ++k) pq.push({d + w[k], m + unit_vec(k)});
  }
  if (ndone != G.num_chars()) return std::nullopt;
  MonomialSet M{G, s, std::move(best)};
  if (!arrows_regular(M)) return std::nullopt;
  return M;
}

MonomialSet building_block_product(const AbelianAction& G, const MonomialSet& gamma,
                                   const MonomialSet& omega, const Chart& parent,
                                   const Simplex& target) {
  const int n = target.dim;
  MonomialSet M{G, target, {}};
  M.mono.assign(static_cast<std::size_t>(G.num_chars()), Vec{0, 0, 0});
  std::vector<char> seen(static_cast<std::size_t>(G.num_chars()), 0);
  std::size_t count = 0;
  for (const Vec& om : omega.mono) {
    Vec wx{0, 0, 0};
    for (int j = 0; j < n; ++j) wx = wx + om[j] * parent.coords[j];
    for (const Vec& lam : gamma.mono) {
      Vec m = wx + lam;
      int c = G.char_index(m);
      if (seen[c])
        throw InputError("building_block_product: two products share the character " +
                         G.char_label(c));
      seen[c] = 1;
      M.mono[c] = m;
      ++count;
    }
  }
  if (count != static_cast<std::size_t>(G.num_chars()))
    throw InputError("building_block_product: |Omega| * |Gamma| differs from |G|");
  return M;
}

bool is_staircase(const MonomialSet& M) {
  std::set<Vec> s(M.mono.begin(), M.mono.end());
  for (const Vec& m : s) {
    for (int k = 0; k < 3; ++k) {
      if (m[k] < 0) return false;
      if (m[k] > 0 && !s.count(m - unit_vec(k))) return false;
    }
  }
  return true;
}

Vec arrow_value(const MonomialSet& M, const Arrow& a) {
  Vec m = M.at(a.source) + unit_vec(a.k);
  return m - M.at(M.group.char_index(m));
}

bool arrows_regular(const MonomialSet& M) {
  for (int c = 0; c < static_cast<int>(M.size()); ++c)
    for (int k = 0; k < M.simplex.dim; ++k)
      if (!regular_on(arrow_value(M, {c, k}), M.simplex)) return false;
  return true;
}

std::vector<Arrow> skeleton(const MonomialSet& M) {
  std::vector<Arrow> out;
  for (int c = 0; c < static_cast<int>(M.size()); ++c)
    for (int k = 0; k < M.simplex.dim; ++k)
      if (arrow_value(M, {c, k}) == Vec{0, 0, 0}) out.push_back({c, k});
  return out;
}

std::vector<ArrowValue> local_coordinates(const MonomialSet& M) {
  std::vector<ArrowValue> out;
  for (int c = 0; c < static_cast<int>(M.size()); ++c)
    for (int k = 0; k < M.simplex.dim; ++k) {
      Vec v = arrow_value(M, {c, k});
      if (v != Vec{0, 0, 0}) out.push_back({{c, k}, v});
    }
  return out;
}

}  // namespace mckay
