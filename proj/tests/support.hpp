#pragma once

#include "spinnet/central_expansion.hpp"
#include "spinnet/network_map.hpp"
#include "spinnet/poly3.hpp"

#include <doctest.h>

#include <map>
#include <string>

namespace doctest {
template <>
struct StringMaker<spinnet::Poly3> {
  static String convert(const spinnet::Poly3& p) { return spinnet::to_string(p).c_str(); }
};
template <>
struct StringMaker<spinnet::CentralExpansion> {
  static String convert(const spinnet::CentralExpansion& e) { return spinnet::to_string(e).c_str(); }
};
template <>
struct StringMaker<spinnet::Rational> {
  static String convert(const spinnet::Rational& q) { return spinnet::to_string(q).c_str(); }
};
template <>
struct StringMaker<spinnet::NetworkMap> {
  static String convert(const spinnet::NetworkMap& m) {
    return ("NetworkMap " + std::to_string(m.inputs()) + "->" + std::to_string(m.outputs())).c_str();
  }
};
}  // namespace doctest

namespace oracle {

using spinnet::Integer;
using spinnet::Rational;

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Integer fact(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

// alpha! beta! gamma! (delta+1)! / (a! b! c!) with plain loops.
inline Rational theta(long a, long b, long c) {
  long al = (-a + b + c) / 2, be = (a - b + c) / 2, ga = (a + b - c) / 2, de = (a + b + c) / 2;
  Rational r(fact(al) * fact(be) * fact(ga) * fact(de + 1), fact(a) * fact(b) * fact(c));
  r.canonicalize();
  return r;
}

// Rank by fraction-free elimination on a copy of the entries.
inline std::size_t rank(const spinnet::NetworkMap& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < a.size(); ++c) {
    std::size_t p = rk;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rk || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[rk][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rk][k];
    }
    ++rk;
  }
  return rk;
}

// chi^n = sum_k lambda^(n-2k), rewritten in t = lambda + 1/lambda by peeling
// off the top power of t each time.
inline std::map<int, Integer> rank1_by_eigenvalues(int n) {
  std::map<int, Integer> laurent;
  for (int k = 0; k <= n; ++k) laurent[n - 2 * k] += 1;
  std::map<int, Integer> poly;
  while (!laurent.empty()) {
    auto top = std::prev(laurent.end());
    int d = top->first;
    Integer c = top->second;
    poly[d] = c;
    for (int j = 0; j <= d; ++j) {
      auto& slot = laurent[d - 2 * j];
      slot -= c * choose(d, j);
    }
    for (auto it = laurent.begin(); it != laurent.end();) it = it->second == 0 ? laurent.erase(it) : std::next(it);
  }
  return poly;
}

}  // namespace oracle
