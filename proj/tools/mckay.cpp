// Command-line front end: fans, constellations, classification, crepant
// enumeration and stability parameters.
//
// Exit codes: 0 success, 2 input error, 3 invariant violation.

#include <CLI11.hpp>
#include <iostream>
#include <set>
#include <sstream>

#include "mckay/classify.hpp"
#include "mckay/errors.hpp"
#include "mckay/hilb_fan.hpp"
#include "mckay/io.hpp"
#include "mckay/iterated_fan.hpp"
#include "mckay/quiver_stability.hpp"
#include "mckay/semidirect_rep.hpp"

using namespace mckay;

namespace {

struct Common {
  std::string group;
  std::string chain;
  std::string format = "text";
  bool verify = false;
  bool seed_check = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-g,--group", c.group, "Group: inline (1/6(1,2,3)), JSON text or JSON file");
  cmd->add_option("--chain", c.chain, "Normal chain, e.g. 1/6(1,2,3)>1/2(1,0,1)");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  cmd->add_flag("--verify", c.verify, "Check crepancy and constellation invariants");
  cmd->add_flag("--seed-check", c.seed_check, "Also run the independent oracle");
}

NormalChain chain_of(const Common& c) {
  if (!c.chain.empty() && !c.group.empty()) throw InputError("give either --group or --chain");
  const std::string& s = c.chain.empty() ? c.group : c.chain;
  if (s.empty()) throw InputError("missing --group or --chain");
  return parse_chain_spec(s);
}

Fan build_fan(const NormalChain& chain) {
  return chain.length() == 1 ? g_hilb_fan_any(chain.groups[0]) : iterated_fan(chain);
}

void verify_fan(const Fan& fan, bool ghilb) {
  check_crepant(fan);
  for (const auto& t : fan.triangles) {
    if (!t.constellation) throw InvariantError("chart without constellation");
    const auto& M = *t.constellation;
    std::set<int> chars;
    for (const Vec& m : M.mono) chars.insert(fan.group.char_index(m));
    if (static_cast<Int>(chars.size()) != fan.group.order())
      throw InvariantError("constellation is not bijective on characters");
    if (!arrows_regular(M)) throw InvariantError("constellation has an irregular arrow");
    if (ghilb && !is_staircase(M)) throw InvariantError("G-Hilb chart is not a staircase");
  }
}

void seed_check_fan(const NormalChain& chain, const Fan& fan) {
  const AbelianAction& G = chain.groups[0];
  if (chain.length() > 1) {
    // Every step fan is re-checked, not just the final one.
    for (const auto& st : iterated_fan_steps(chain, Exec::serial)) verify_fan(st.fan, st.step == 1);
    return;
  }
  if (G.dim() == 3) {
    if (!fan.same_triangles(g_hilb_fan_scan(G)))
      throw InvariantError("Craw-Reid fan differs from the G-graph scan");
    return;
  }
  // Cyclic GL(2) groups: compare with the Hirzebruch-Jung chain.
  const Int R = G.exponent();
  for (const Vec& e : G.elements()) {
    if (e[0] != 1 || G.order() != R) continue;
    auto hj = hj_minimal_resolution_2d(R, e[1]);
    std::set<Vec> rays(hj.rays.begin(), hj.rays.end()), got;
    for (const auto& t : fan.triangles) got.insert({t.tri.v[0], t.tri.v[1]});
    if (rays != got) throw InvariantError("2D fan differs from the Hirzebruch-Jung resolution");
    return;
  }
}

void emit(const Json& j, const std::string& text, const std::string& dot, const std::string& fmt) {
  if (fmt == "json") std::cout << j.dump(2) << '\n';
  else if (fmt == "dot") std::cout << (dot.empty() ? j.dump(2) + "\n" : dot);
  else std::cout << text;
}

int cmd_fan(const Common& c, bool trace) {
  const NormalChain chain = chain_of(c);
  const Fan fan = build_fan(chain);
  if (c.verify) verify_fan(fan, chain.length() == 1);
  if (c.seed_check) seed_check_fan(chain, fan);
  Json j = fan_json(fan);
  std::string text = fan_text(fan);
  if (trace && chain.length() == 1 && chain.groups[0].dim() == 3) {
    const auto tr = craw_reid(chain.groups[0]);
    Json lines = Json::array();
    std::ostringstream os;
    os << "Craw-Reid lines:\n";
    for (const auto& l : tr.lines) {
      const Vec& end = l.path[static_cast<std::size_t>(l.extent - 1)];
      lines.push_back({{"corner", l.corner}, {"label", l.label}, {"end", point_str(end, tr.den)}});
      os << "  e" << l.corner + 1 << " -> " << point_str(end, tr.den) << "  (label " << l.label << ")\n";
    }
    j["craw_reid_lines"] = lines;
    text += os.str();
  }
  emit(j, text, fan_dot(fan), c.format);
  return 0;
}

int cmd_constellations(const Common& c, bool skel, bool local) {
  const NormalChain chain = chain_of(c);
  const Fan fan = build_fan(chain);
  if (c.verify) verify_fan(fan, chain.length() == 1);
  if (c.seed_check) seed_check_fan(chain, fan);
  const AbelianAction& G = fan.group;
  const int dim = G.dim();
  Json charts = Json::array();
  std::ostringstream os;
  for (const auto& t : fan.triangles) {
    const MonomialSet& M = *t.constellation;
    Json pts = Json::array();
    os << "chart";
    for (int k = 0; k < dim; ++k) {
      pts.push_back(point_str(t.tri.v[k], t.tri.den, dim));
      os << ' ' << point_str(t.tri.v[k], t.tri.den, dim);
    }
    const Chart ch = chart_coordinates(t.tri);
    Json coords = Json::array();
    os << "\n  coordinates:";
    for (int k = 0; k < dim; ++k) {
      coords.push_back(laurent_str(ch.coords[k], dim));
      os << ' ' << laurent_str(ch.coords[k], dim);
    }
    os << "\n  constellation: {";
    auto r = M.rendered();
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r[i];
    os << "}" << (is_staircase(M) ? "  staircase" : "") << '\n';
    Json o{{"points", pts},
           {"coordinates", coords},
           {"step", t.step},
           {"constellation", monomials_json(M)},
           {"staircase", is_staircase(M)}};
    if (skel) {
      Json a = Json::array();
      os << "  skeleton:";
      for (const Arrow& ar : skeleton(M)) {
        const std::string src = laurent_str(M.at(ar.source), dim);
        const char var = "xyz"[ar.k];
        a.push_back({{"source", src}, {"variable", std::string(1, var)}});
        os << " (" << src << "," << var << ")";
      }
      os << '\n';
      o["skeleton"] = a;
    }
    if (local) {
      std::set<std::string> vals;
      for (const auto& av : local_coordinates(M)) vals.insert(laurent_str(av.value, dim));
      o["local_coordinates"] = vals;
      os << "  local coordinates:";
      for (const auto& v : vals) os << ' ' << v;
      os << '\n';
    }
    charts.push_back(std::move(o));
  }
  emit({{"group", G.str()}, {"charts", charts}}, os.str(), "", c.format);
  return 0;
}

int cmd_classify(const Common& c, const std::string& nspec, bool fans) {
  NormalChain chain = c.chain.empty() ? parse_chain_spec(c.group) : parse_chain_spec(c.chain);
  if (!nspec.empty()) {
    if (chain.length() != 1) throw InputError("give N either in the chain or with --normal");
    chain = NormalChain::make({chain.groups[0], parse_group_inline(nspec)});
  }
  if (chain.length() != 2) throw InputError("classify needs exactly G and N");
  const auto& G = chain.groups[0];
  const auto& N = chain.groups[1];
  const IsoVerdict v = classify_pair(G, N, c.seed_check);
  if (c.seed_check && !*v.oracle_agreement)
    throw InvariantError("predicate and oracle disagree for " + G.str() + " > " + N.str());
  Json j = verdict_json(v);
  j["G"] = G.str();
  j["N"] = N.str();
  std::ostringstream os;
  os << G.str() << " > " << N.str() << "\n  moduli_iso:  " << (v.moduli_iso ? "true" : "false")
     << "\n  variety_iso: " << (v.variety_iso ? "true" : "false")
     << "\n  case:        " << to_string(v.matched_case) << '\n';
  if (v.oracle_agreement) os << "  oracles agree: " << (*v.oracle_agreement ? "yes" : "no") << '\n';
  if (fans) {
    const Fan a = g_hilb_fan_any(G), b = iterated_fan(chain);
    j["g_hilb_fan"] = fan_json(a);
    j["iterated_fan"] = fan_json(b);
    os << fan_text(a) << fan_text(b);
  }
  emit(j, os.str(), "", c.format);
  return 0;
}

int cmd_enumerate(const Common& c, Int bound) {
  const NormalChain chain = chain_of(c);
  if (chain.length() != 1) throw InputError("enumerate takes a single group");
  const FlopGraph g = flop_graph(chain.groups[0], bound);
  if (c.verify)
    for (const auto& f : g.fans) check_crepant(f);
  int hilb = -1;
  for (std::size_t i = 0; i < g.fans.size(); ++i)
    if (all_charts_have_g_graphs(g.fans[i])) {
      if (hilb >= 0) throw InvariantError("more than one enumerated fan has G-graph charts");
      hilb = static_cast<int>(i);
    }
  if (c.seed_check) {
    if (hilb < 0) throw InvariantError("no enumerated fan has G-graph charts");
    if (!g.fans[hilb].same_triangles(g_hilb_fan(chain.groups[0])))
      throw InvariantError("enumerated G-Hilb fan differs from the Craw-Reid fan");
  }
  Json fans = Json::array();
  std::ostringstream os;
  os << g.fans.size() << " crepant fans, " << g.edges.size() << " flops\n";
  for (std::size_t i = 0; i < g.fans.size(); ++i) {
    Json f = fan_json(g.fans[i]);
    f["g_hilb"] = static_cast<int>(i) == hilb;
    fans.push_back(std::move(f));
    os << "fan " << i << (static_cast<int>(i) == hilb ? " (G-Hilb)" : "") << ":";
    for (const auto& [a, b] : g.fans[i].edges())
      if (!(a[0] == 0 && b[0] == 0) && !(a[1] == 0 && b[1] == 0) && !(a[2] == 0 && b[2] == 0))
        os << ' ' << point_str(a, g.fans[i].den) << '-' << point_str(b, g.fans[i].den);
    os << '\n';
  }
  Json edges = Json::array();
  for (auto [a, b] : g.edges) {
    edges.push_back({a, b});
    os << "flop " << a << " -- " << b << '\n';
  }
  emit({{"group", chain.groups[0].str()}, {"fans", fans}, {"flops", edges}}, os.str(),
       flop_graph_dot(g), c.format);
  return 0;
}

std::vector<Rational> default_level(std::size_t n, Int scale = 1) {
  std::vector<Rational> v(n, Rational(scale));
  v[0] = Rational(-scale * static_cast<Int>(n - 1));
  return v;
}

int cmd_theta(const Common& c, const std::vector<std::string>& levels, const std::string& semi,
              const std::string& theta_n, const std::string& theta_h) {
  Json j;
  std::ostringstream os;
  if (!semi.empty()) {
    const SemidirectSpec spec = parse_semidirect(semi);
    const IrrLayout L = irr_table(spec);
    auto tn = theta_n.empty() ? default_level(static_cast<std::size_t>(spec.num_chars_N()))
                              : parse_rational_list(theta_n);
    std::vector<Rational> th;
    if (theta_h.empty()) {
      const auto d = spec.H.irr_dims();
      th.assign(d.size(), Rational(1));
      Int s = 0;
      for (std::size_t i = 1; i < d.size(); ++i) s += d[i];
      th[0] = Rational(-s);
    } else {
      th = parse_rational_list(theta_h);
    }
    const StabilityVector t = theta_semidirect(spec, tn, th);
    if (c.verify && !t.regular_value().is_zero()) throw InvariantError("theta(R_G) is not zero");
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      rows.push_back({{"irr", L.irr[i].label()}, {"dim", t.dims[i]}, {"theta", lex_json(t.entries[i], 2)}});
      os << L.irr[i].label() << "  dim " << t.dims[i] << "  " << lex_str(t.entries[i]) << '\n';
    }
    j = {{"layout", irr_layout_json(L)}, {"theta", rows}, {"regular_value", lex_json(t.regular_value(), 2)}};
    os << "theta(R_G) = " << lex_str(t.regular_value()) << '\n';
  } else {
    const NormalChain chain = chain_of(c);
    const int k = chain.length() - 1;
    std::vector<std::vector<Rational>> lv;
    for (int i = 0; i <= k; ++i) {
      if (i < static_cast<int>(levels.size())) {
        lv.push_back(parse_rational_list(levels[static_cast<std::size_t>(i)]));
      } else {
        const std::size_t n = i == 0 ? static_cast<std::size_t>(chain.groups[k].order())
                                     : quotient_characters(chain.groups[k - i], chain.groups[k - i + 1]).size();
        lv.push_back(default_level(n));
      }
    }
    if (static_cast<int>(levels.size()) > k + 1) throw InputError("more --level options than chain members");
    const StabilityVector t = theta_construct(chain, lv);
    const AbelianAction& G = chain.groups[0];
    const bool generic = is_generic(t);
    const Fan fan = build_fan(chain);
    const bool inside = theta_in_chamber(t, fan);
    if (c.verify && !t.regular_value().is_zero()) throw InvariantError("theta(R_G) is not zero");
    if (c.seed_check && (!generic || !inside))
      throw InvariantError("theta is not generic or lies outside the chamber of the fan");
    Json rows = Json::array();
    for (int ch = 0; ch < G.num_chars(); ++ch) {
      rows.push_back({{"character", G.char_label(ch)},
                      {"theta", lex_json(t.entries[static_cast<std::size_t>(ch)], static_cast<std::size_t>(k + 1))}});
      os << "rho_" << G.char_label(ch) << "  " << lex_str(t.entries[static_cast<std::size_t>(ch)]) << '\n';
    }
    j = {{"group", G.str()},
         {"theta", rows},
         {"regular_value", lex_json(t.regular_value(), static_cast<std::size_t>(k + 1))},
         {"generic", generic},
         {"in_chamber", inside}};
    os << "theta(R_G) = " << lex_str(t.regular_value()) << "\ngeneric: " << (generic ? "yes" : "no")
       << "\nin chamber of the fan: " << (inside ? "yes" : "no") << '\n';
  }
  emit(j, os.str(), "", c.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-Hilbert schemes, iterated Hilbert schemes and McKay quiver stability"};
  app.require_subcommand(1);

  Common fan_c, con_c, cls_c, enu_c, th_c;
  bool trace = false, skel = false, local = false, both_fans = false;
  std::string normal, semi, theta_n, theta_h;
  Int bound = kDefaultEnumerationBound;
  std::vector<std::string> levels;

  auto* fan = app.add_subcommand("fan", "G-Hilb or iterated fan");
  add_common(fan, fan_c);
  fan->add_flag("--trace", trace, "Include the Craw-Reid lines");

  auto* con = app.add_subcommand("constellations", "Constellations of every chart");
  add_common(con, con_c);
  con->add_flag("--skeleton", skel, "Print skeleton arrows");
  con->add_flag("--local", local, "Print local coordinates");

  auto* cls = app.add_subcommand("classify", "Is G/N-Hilb(N-Hilb) isomorphic to G-Hilb?");
  add_common(cls, cls_c);
  cls->add_option("-n,--normal", normal, "Normal subgroup N (inline)");
  cls->add_flag("--fans", both_fans, "Include both fans");

  auto* enu = app.add_subcommand("enumerate", "All crepant fans and the flop graph");
  add_common(enu, enu_c);
  enu->add_option("--bound", bound, "Largest |G| to enumerate")->check(CLI::PositiveNumber);

  auto* th = app.add_subcommand("theta", "Stability parameter of a chain or semidirect product");
  add_common(th, th_c);
  th->add_option("--level", levels, "Theta of one chain level, innermost first (e.g. -1,1)");
  th->add_option("--semidirect", semi, "D<2n>, G12, D8xZ3 or JSON");
  th->add_option("--theta-n", theta_n, "Theta on Irr(N)");
  th->add_option("--theta-h", theta_h, "Theta on Irr(H)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*fan) return cmd_fan(fan_c, trace);
    if (*con) return cmd_constellations(con_c, skel, local);
    if (*cls) return cmd_classify(cls_c, normal, both_fans);
    if (*enu) return cmd_enumerate(enu_c, bound);
    if (*th) return cmd_theta(th_c, levels, semi, theta_n, theta_h);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
