#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/hilb_fan.hpp"

namespace support {

using mckay::AbelianAction;
using mckay::Int;
using mckay::Vec;

// 1/n(a,b,c) in SL(3).
inline AbelianAction g3(Int n, Int a, Int b, Int c) {
  return AbelianAction::from_generators(3, true, {{n, {a, b, c}}});
}

inline AbelianAction g3(std::initializer_list<mckay::Generator> gens) {
  return AbelianAction::from_generators(3, true, std::vector<mckay::Generator>(gens));
}

// 1/n(a,b) in GL(2).
inline AbelianAction g2(Int n, Int a, Int b) {
  return AbelianAction::from_generators(2, false, {{n, {a, b, 0}}});
}

// "x^2/z", "xy^2", "1", "z^2/x^2" -> exponent vector.
inline Vec mono(const std::string& s) {
  Vec out{0, 0, 0};
  auto part = [&](const std::string& t, Int sign) {
    for (std::size_t i = 0; i < t.size();) {
      const char c = t[i++];
      if (c == '1' && t.size() == 1) return;
      const int k = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1;
      if (k < 0) throw std::invalid_argument("bad monomial " + s);
      Int e = 1;
      if (i < t.size() && t[i] == '^') {
        std::size_t j = ++i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        e = std::stoll(t.substr(i, j - i));
        i = j;
      }
      out[k] += sign * e;
    }
  };
  const auto slash = s.find('/');
  part(s.substr(0, slash), 1);
  if (slash != std::string::npos) part(s.substr(slash + 1), -1);
  return out;
}

inline std::vector<Vec> monos(std::initializer_list<const char*> list) {
  std::vector<Vec> out;
  for (const char* s : list) out.push_back(mono(s));
  std::sort(out.begin(), out.end());
  return out;
}

using TriangleKey = std::vector<Vec>;  // three scaled vertices, sorted descending

inline TriangleKey key(const mckay::Simplex& s, Int den) {
  TriangleKey out;
  for (int k = 0; k < s.dim; ++k) {
    Vec v = s.v[k];
    for (auto& x : v) x = x * den / s.den;
    out.push_back(v);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::set<TriangleKey> keys(const mckay::Fan& f, Int den) {
  std::set<TriangleKey> out;
  for (const auto& t : f.triangles) out.insert(key(t.tri, den));
  return out;
}

inline std::set<TriangleKey> keys(std::initializer_list<std::initializer_list<Vec>> tris) {
  std::set<TriangleKey> out;
  for (auto t : tris) {
    TriangleKey k(t.begin(), t.end());
    std::sort(k.rbegin(), k.rend());
    out.insert(k);
  }
  return out;
}

}  // namespace support
