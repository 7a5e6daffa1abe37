#pragma once

// Parsing of group / chain / semidirect specifications and JSON, text and
// DOT rendering of results.
//
// Inline grammar:
//   group := term ('+' term)*          term := '1/' n '(' w ',' w [',' w] ')'
//   chain := group ('>' group)*
// Two weights give a group in GL(2); three weights a group in SL(3) (the
// weights must sum to a multiple of n).
//
// JSON group: {"dim":3, "generators":[{"order":6,"weights":[1,2,3]}],
//              "chain":[[0],[1]]}   (optional; generator indices of N_1, N_2, ...)

#include <string>
#include <vector>

#include <json.hpp>

#include "mckay/classify.hpp"
#include "mckay/iterated_fan.hpp"
#include "mckay/quiver_stability.hpp"
#include "mckay/semidirect_rep.hpp"

namespace mckay {

using Json = nlohmann::ordered_json;

AbelianAction parse_group_inline(const std::string& text);
NormalChain parse_chain_inline(const std::string& text);

// Accepts inline text, a JSON document, or a path to a JSON file.  A group
// without a chain yields a chain of length one.
NormalChain parse_chain_spec(const std::string& text);

// "a/b" or an integer.
Rational parse_rational(const std::string& text);
// Comma-separated rationals.
std::vector<Rational> parse_rational_list(const std::string& text);

// {"N":[d1,...], "H":{"type":"dihedral","m":4}, "action":[[[...]], ...]}, or
// one of the presets "D<2n>", "G12", "D8xZ3".
SemidirectSpec parse_semidirect(const std::string& text);

Json vec_json(const Vec& v, int dim);
Json rational_json(const Rational& r);
Json lex_json(const LexRational& x, std::size_t levels);
Json monomials_json(const MonomialSet& M);
Json fan_json(const Fan& fan);
Json verdict_json(const IsoVerdict& v);
Json irr_layout_json(const IrrLayout& L);

std::string fan_text(const Fan& fan);
std::string fan_dot(const Fan& fan);
std::string flop_graph_dot(const FlopGraph& g);

}  // namespace mckay
