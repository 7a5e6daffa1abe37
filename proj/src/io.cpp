#include "mckay/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

Int to_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw InputError("not an integer: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InputError("not an integer: '" + s + "'");
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

NormalChain chain_from_json(const Json& j) {
  try {
    const int dim = j.value("dim", 3);
    if (dim != 2 && dim != 3) throw InputError("dim must be 2 or 3");
    const bool sl = j.value("sl", dim == 3);
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators")) {
      Generator x;
      x.order = g.at("order").get<Int>();
      auto w = g.at("weights").get<std::vector<Int>>();
      if (static_cast<int>(w.size()) != dim) throw InputError("generator weights must have dim entries");
      for (int k = 0; k < dim; ++k) x.weights[k] = w[k];
      gens.push_back(x);
    }
    if (gens.empty()) throw InputError("a group needs at least one generator");
    std::vector<AbelianAction> groups{AbelianAction::from_generators(dim, sl, gens)};
    if (j.contains("chain")) {
      for (const auto& idx : j.at("chain")) {
        std::vector<Generator> sub;
        for (const auto& i : idx) {
          const auto k = i.get<std::size_t>();
          if (k >= gens.size()) throw InputError("chain refers to a missing generator");
          sub.push_back(gens[k]);
        }
        if (sub.empty()) sub.push_back({1, {0, 0, 0}});
        groups.push_back(AbelianAction::from_generators(dim, sl, sub));
      }
    }
    return NormalChain::make(std::move(groups));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed group JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json laurent_json(const Vec& m, int dim) {
  Json a = Json::array();
  for (int k = 0; k < dim; ++k) a.push_back(m[k]);
  return a;
}

}  // namespace

AbelianAction parse_group_inline(const std::string& text) {
  static const std::regex term(R"(^1/(\d+)\((-?\d+),(-?\d+)(?:,(-?\d+))?\)$)");
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw InputError("empty group specification");
  std::vector<Generator> gens;
  int dim = 0;
  for (const auto& t : split(compact, '+')) {
    std::smatch m;
    if (!std::regex_match(t, m, term))
      throw InputError("cannot parse group term '" + t + "'; expected e.g. 1/6(1,2,3)");
    const int d = m[4].matched ? 3 : 2;
    if (dim && d != dim) throw InputError("group terms mix dimensions");
    dim = d;
    Generator g;
    g.order = to_int(m[1]);
    if (g.order < 1) throw InputError("generator order must be positive");
    g.weights = {to_int(m[2]), to_int(m[3]), d == 3 ? to_int(m[4]) : 0};
    gens.push_back(g);
  }
  return AbelianAction::from_generators(dim, dim == 3, gens);
}

NormalChain parse_chain_inline(const std::string& text) {
  std::vector<AbelianAction> groups;
  for (const auto& part : split(text, '>')) groups.push_back(parse_group_inline(part));
  return NormalChain::make(std::move(groups));
}

NormalChain parse_chain_spec(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return chain_from_json(parse_json(t));
  std::error_code ec;
  if (std::filesystem::is_regular_file(t, ec)) return parse_chain_spec(read_file(t));
  return parse_chain_inline(t);
}

Rational parse_rational(const std::string& text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(to_int(t));
  const Int den = to_int(trim(t.substr(slash + 1)));
  if (den == 0) throw InputError("zero denominator in '" + t + "'");
  return Rational(to_int(trim(t.substr(0, slash))), den);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_rational(s));
  return out;
}

SemidirectSpec parse_semidirect(const std::string& text) {
  const std::string t = trim(text);
  if (t == "G12") return {{2, 2}, {HSpec::Kind::z3, 3}, {{{0, 1}, {1, 1}}}};
  if (t == "D8xZ3") return {{3}, {HSpec::Kind::dihedral, 4}, {{{1}}, {{2}}}};
  if (t.size() > 1 && t[0] == 'D' && t.find_first_not_of("0123456789", 1) == std::string::npos) {
    const Int k = to_int(t.substr(1));
    if (k < 4 || k % 2 != 0) throw InputError("dihedral preset needs an even order >= 4");
    return dihedral_spec(k / 2);
  }
  std::error_code ec;
  const std::string body =
      (!t.empty() && t.front() == '{') ? t
      : std::filesystem::is_regular_file(t, ec)
          ? read_file(t)
          : throw InputError("unknown semidirect specification '" + t + "'");
  const Json j = parse_json(body);
  try {
    SemidirectSpec s;
    s.N = j.at("N").get<std::vector<Int>>();
    const auto& h = j.at("H");
    const std::string type = h.at("type").get<std::string>();
    if (type == "cyclic") s.H = {HSpec::Kind::cyclic, h.at("m").get<Int>()};
    else if (type == "dihedral") s.H = {HSpec::Kind::dihedral, h.at("m").get<Int>()};
    else if (type == "klein") s.H = {HSpec::Kind::klein, 2};
    else if (type == "z3") s.H = {HSpec::Kind::z3, 3};
    else throw InputError("unknown H type '" + type + "'");
    if (s.H.order() < 1) throw InputError("H must have positive order");
    for (const auto& A : j.at("action")) s.action.push_back(A.get<IntMatrix>());
    return s;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed semidirect JSON: ") + e.what());
  }
}

Json vec_json(const Vec& v, int dim) { return laurent_json(v, dim); }

Json rational_json(const Rational& r) { return Json::array({r.numerator(), r.denominator()}); }

Json lex_json(const LexRational& x, std::size_t levels) {
  Json a = Json::array();
  for (std::size_t i = 0; i < levels; ++i) {
    Rational r = x.level(i);
    a.push_back(r.numerator());
    a.push_back(r.denominator());
  }
  return a;
}

Json monomials_json(const MonomialSet& M) {
  Json a = Json::array();
  const int dim = M.simplex.dim;
  for (int c = 0; c < static_cast<int>(M.size()); ++c)
    a.push_back({{"character", M.group.char_label(c)},
                 {"exponent", laurent_json(M.at(c), dim)},
                 {"monomial", laurent_str(M.at(c), dim)}});
  return a;
}

Json fan_json(const Fan& fan) {
  const int dim = fan.group.dim();
  Json tris = Json::array();
  for (const auto& t : fan.triangles) {
    Json verts = Json::array(), pts = Json::array();
    for (int k = 0; k < dim; ++k) {
      verts.push_back(laurent_json(t.tri.v[k], dim));
      pts.push_back(point_str(t.tri.v[k], t.tri.den, dim));
    }
    Json o{{"vertices", verts}, {"points", pts}, {"step", t.step}};
    if (t.constellation) o["constellation"] = monomials_json(*t.constellation);
    tris.push_back(std::move(o));
  }
  Json edges = Json::array();
  std::vector<EdgeStep> es = fan.edge_steps;
  if (es.empty())
    for (const auto& e : fan.edges()) es.push_back({e, 1});
  for (const auto& e : es)
    edges.push_back({{"from", point_str(e.edge.first, fan.den, dim)},
                     {"to", point_str(e.edge.second, fan.den, dim)},
                     {"step", e.step}});
  return {{"group", fan.group.str()},
          {"order", fan.group.order()},
          {"den", fan.den},
          {"triangles", tris},
          {"edges", edges}};
}

Json verdict_json(const IsoVerdict& v) {
  Json j{{"moduli_iso", v.moduli_iso},
         {"variety_iso", v.variety_iso},
         {"matched_case", to_string(v.matched_case)}};
  j["oracle_agreement"] = v.oracle_agreement ? Json(*v.oracle_agreement) : Json(nullptr);
  if (v.moduli_oracle) j["moduli_oracle"] = *v.moduli_oracle;
  if (v.variety_oracle) j["variety_oracle"] = *v.variety_oracle;
  return j;
}

Json irr_layout_json(const IrrLayout& L) {
  Json orbits = Json::array();
  for (const auto& o : L.orbits) {
    Json mem = Json::array();
    for (int c : o.members) mem.push_back(n_char(L.spec, c));
    orbits.push_back({{"members", mem},
                      {"length", o.members.size()},
                      {"stabilizer", o.stabilizer.str()},
                      {"tau_dims", o.tau_dims}});
  }
  Json irr = Json::array();
  for (const auto& e : L.irr) irr.push_back({{"label", e.label()}, {"dim", e.dim}});
  return {{"order", L.spec.order()}, {"orbits", orbits}, {"irr", irr}};
}

std::string fan_text(const Fan& fan) {
  std::ostringstream os;
  const int dim = fan.group.dim();
  os << "fan of " << fan.group.str() << ": " << fan.triangles.size()
     << (dim == 3 ? " triangles\n" : " cones\n");
  for (const auto& t : fan.triangles) {
    os << "  [step " << t.step << "]";
    for (int k = 0; k < dim; ++k) os << ' ' << point_str(t.tri.v[k], t.tri.den, dim);
    if (t.constellation) {
      os << "  {";
      auto r = t.constellation->rendered();
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r[i];
      os << '}';
    }
    os << '\n';
  }
  return os.str();
}

std::string fan_dot(const Fan& fan) {
  std::ostringstream os;
  const int dim = fan.group.dim();
  os << "graph fan {\n  label=\"" << fan.group.str() << "\";\n";
  std::vector<EdgeStep> es = fan.edge_steps;
  if (es.empty())
    for (const auto& e : fan.edges()) es.push_back({e, 1});
  for (const auto& e : es)
    os << "  \"" << point_str(e.edge.first, fan.den, dim) << "\" -- \""
       << point_str(e.edge.second, fan.den, dim) << "\" [label=\"" << e.step << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string flop_graph_dot(const FlopGraph& g) {
  std::ostringstream os;
  os << "graph flops {\n";
  for (std::size_t i = 0; i < g.fans.size(); ++i) {
    os << "  f" << i << " [label=\"fan " << i;
    if (all_charts_have_g_graphs(g.fans[i])) os << " (G-Hilb)";
    os << "\"];\n";
  }
  for (auto [a, b] : g.edges) os << "  f" << a << " -- f" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mckay
