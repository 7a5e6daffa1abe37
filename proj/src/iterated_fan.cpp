#include "mckay/iterated_fan.hpp"

#include <algorithm>
#include <exception>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

bool on_segment(const Vec& p, const Vec& a, const Vec& b) {
  if (cross(b - a, p - a) != Vec{0, 0, 0}) return false;
  Int t = dot(b - a, p - a);
  return t >= 0 && t <= dot(b - a, b - a);
}

// Re-triangulate one chart of the step fan of `small` for the group `big`.
std::vector<FanTriangle> refine_chart(const AbelianAction& big, const AbelianAction& small,
                                      const FanTriangle& parent, int step) {
  const Simplex& s = parent.tri;
  const Chart ch = chart_coordinates(s);
  const AbelianAction A = quotient_action_on_chart(big, small, ch);
  const Fan sub = g_hilb_fan_any(A);
  const Int RB = big.exponent();
  const int n = s.dim;
  std::vector<FanTriangle> out;
  for (const auto& t : sub.triangles) {
    const Int scale = sub.den * s.den;
    std::array<Vec, 3> verts{};
    for (int j = 0; j < n; ++j) {
      Vec acc{0, 0, 0};
      for (int k = 0; k < n; ++k) acc = acc + t.tri.v[j][k] * s.v[k];
      for (Int& x : acc) {
        if ((x * RB) % scale != 0)
          throw InvariantError("iterated_fan: refined vertex is not a lattice point");
        x = x * RB / scale;
      }
      verts[static_cast<std::size_t>(j)] = acc;
    }
    Simplex target = Simplex::make(n, RB, verts);
    MonomialSet M = building_block_product(big, *parent.constellation, *t.constellation, ch, target);
    out.push_back({target, A.order() == 1 ? parent.step : step, std::move(M)});
  }
  return out;
}

}  // namespace

NormalChain NormalChain::make(std::vector<AbelianAction> groups) {
  if (groups.empty()) throw InputError("a normal chain needs at least one group");
  for (std::size_t i = 1; i < groups.size(); ++i) {
    if (groups[i].dim() != groups[0].dim())
      throw InputError("chain members act in different dimensions");
    if (!groups[i - 1].contains_group(groups[i]))
      throw InputError(groups[i].str() + " is not a subgroup of " + groups[i - 1].str());
  }
  return NormalChain{std::move(groups)};
}

AbelianAction quotient_action_on_chart(const AbelianAction& big, const AbelianAction& small,
                                       const Chart& chart) {
  const int n = chart.simplex.dim;
  const Int Rs = small.exponent();
  for (const Vec& g : small.elements())
    for (int j = 0; j < n; ++j)
      if (mod(dot(chart.coords[j], g), Rs) != 0)
        throw InputError("chart coordinate " + laurent_str(chart.coords[j], n) +
                         " is not invariant under " + small.str());
  const Int R = big.exponent();
  std::vector<Vec> gens;
  for (const Vec& g : big.smith_generators()) {
    Vec w{0, 0, 0};
    for (int j = 0; j < n; ++j) w[j] = mod(dot(chart.coords[j], g), R);
    gens.push_back(w);
  }
  return AbelianAction::from_scaled(n, R, gens);
}

std::vector<ChainStep> iterated_fan_steps(const NormalChain& chain, Exec exec) {
  std::vector<ChainStep> steps;
  const int k = chain.length();
  const AbelianAction& inner = chain.groups[k - 1];
  steps.push_back({1, inner, g_hilb_fan_any(inner)});
  for (int i = k - 2; i >= 0; --i) {
    const int step = k - i;
    const AbelianAction& big = chain.groups[i];
    const ChainStep& prev = steps.back();
    const auto& parents = prev.fan.triangles;
    std::vector<std::vector<FanTriangle>> parts(parents.size());
    if (exec == Exec::parallel) {
      // Exceptions cannot leave an OpenMP region; collect the first one.
      std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
      for (std::size_t c = 0; c < parents.size(); ++c) {
        try {
          parts[c] = refine_chart(big, prev.group, parents[c], step);
        } catch (...) {
#pragma omp critical
          if (!err) err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);
    } else {
      for (std::size_t c = 0; c < parents.size(); ++c)
        parts[c] = refine_chart(big, prev.group, parents[c], step);
    }
    Fan f;
    f.group = big;
    f.den = big.exponent();
    for (auto& p : parts)
      for (auto& t : p) f.triangles.push_back(std::move(t));
    std::sort(f.triangles.begin(), f.triangles.end(),
              [](const FanTriangle& a, const FanTriangle& b) { return a.tri < b.tri; });
    check_crepant(f);
    steps.push_back({step, big, std::move(f)});
  }
  return steps;
}

Fan iterated_fan(const NormalChain& chain, Exec exec) {
  auto steps = iterated_fan_steps(chain, exec);
  Fan out = std::move(steps.back().fan);
  for (const Edge& e : out.edges()) {
    int found = static_cast<int>(steps.size());
    for (const auto& st : steps) {
      const Int scale = out.den / st.fan.den;
      bool hit = false;
      for (const auto& [c, d] : st.fan.edges())
        if (on_segment(e.first, scale * c, scale * d) && on_segment(e.second, scale * c, scale * d)) {
          hit = true;
          break;
        }
      if (hit) {
        found = st.step;
        break;
      }
    }
    out.edge_steps.push_back({e, found});
  }
  return out;
}

}  // namespace mckay
