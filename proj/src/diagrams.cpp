#include "spinnet/diagrams.hpp"

#include "spinnet/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace spinnet {

NetworkMap primitive(Primitive p) {
  switch (p) {
    case Primitive::identity:
      return NetworkMap::identity(1);
    case Primitive::cap: {
      NetworkMap m(2, 0);
      m(0, 0b00) = 1;
      m(0, 0b11) = 1;
      return m;
    }
    case Primitive::cup: {
      NetworkMap m(0, 2);
      m(0b00, 0) = 1;
      m(0b11, 0) = 1;
      return m;
    }
    case Primitive::cap_vertex: {
      NetworkMap m(2, 0);
      m(0, 0b01) = 1;
      m(0, 0b10) = -1;
      return m;
    }
    case Primitive::cup_vertex: {
      NetworkMap m(0, 2);
      m(0b01, 0) = 1;
      m(0b10, 0) = -1;
      return m;
    }
    case Primitive::swap: {
      NetworkMap m(2, 2);
      m(0b00, 0b00) = 1;
      m(0b01, 0b10) = 1;
      m(0b10, 0b01) = 1;
      m(0b11, 0b11) = 1;
      return m;
    }
  }
  throw DomainError("unknown primitive");
}

NetworkMap permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> check(perm);
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n; ++i) {
    if (check[i] != i) throw DomainError("permutation: not a permutation of 0..n-1");
  }
  NetworkMap m(n, n);
  for (std::size_t in = 0; in < m.cols(); ++in) {
    std::size_t out = 0;
    for (int i = 0; i < n; ++i) {
      std::size_t bit = (in >> (n - 1 - perm[i])) & 1u;
      out |= bit << (n - 1 - i);
    }
    m(out, in) = 1;
  }
  return m;
}

const NetworkMap& symmetrizer(int n) {
  if (n < 0) throw DomainError("symmetrizer: negative strand count");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<NetworkMap>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  NetworkMap result(0, 0);
  if (n <= 1) {
    result = NetworkMap::identity(n);
  } else {
    // S_n = A - (n-1)/n * A E A with A = S_{n-1} (x) 1 and E = cup o cap on
    // the last two strands.
    const NetworkMap& prev = symmetrizer(n - 1);
    NetworkMap a = tensor(prev, NetworkMap::identity(1));
    NetworkMap e = compose(primitive(Primitive::cup_vertex), primitive(Primitive::cap_vertex));
    NetworkMap aea = act_on_legs(prev, 0, act_on_legs(e, n - 2, a));
    result = a - aea * Rational(n - 1, n);
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::make_unique<NetworkMap>(std::move(result)));
  return *it->second;
}

NetworkMap symmetrizer_by_permutations(int n) {
  if (n < 0) throw DomainError("symmetrizer: negative strand count");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  NetworkMap sum(n, n);
  Integer count = 0;
  do {
    sum += permutation(perm);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * Rational(Integer(1), count);
}

NetworkMap nested_cups(int n) {
  if (n < 0) throw DomainError("nested_cups: negative count");
  NetworkMap m = NetworkMap::scalar(1);
  for (int i = 0; i < n; ++i) m = act_on_legs(m, 1, primitive(Primitive::cup_vertex));
  return m;
}

NetworkMap nested_caps(int n) {
  if (n < 0) throw DomainError("nested_caps: negative count");
  NetworkMap m = NetworkMap::scalar(1);
  for (int i = 0; i < n; ++i) m = precompose_on_legs(primitive(Primitive::cap_vertex), 1, m);
  return m;
}

NetworkMap close_strands(const NetworkMap& f, int k) {
  if (k < 0 || k > f.inputs() || k > f.outputs()) throw DomainError("close_strands: cannot close that many strands");
  const int m_in = f.inputs() - k;
  const int m_out = f.outputs() - k;
  // Legs after the cups: [m_in inputs][k fed into f][k returning strands].
  NetworkMap g = act_on_legs(nested_cups(k), m_in, NetworkMap::identity(m_in));
  g = act_on_legs(f, 0, g);
  return act_on_legs(nested_caps(k), m_out, g);
}

Rational trace_closure(const NetworkMap& f) {
  if (f.inputs() != f.outputs()) throw DomainError("trace_closure: not an endomorphism");
  return close_strands(f, f.inputs()).value();
}

NetworkMap matrix_map(const Mat2& x) {
  NetworkMap m(1, 1);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m(r, c) = x(r, c);
  }
  return m;
}

NetworkMap matrix_strand(const Mat2& x, int n) {
  const NetworkMap& s = symmetrizer(n);
  NetworkMap xm = matrix_map(x);
  NetworkMap m = s;
  for (int i = 0; i < n; ++i) m = act_on_legs(xm, i, m);
  return act_on_legs(s, 0, m);
}

namespace {

struct ClebschCache {
  std::mutex mu;
  std::map<AdmissibleTriple, std::unique_ptr<NetworkMap>> injections;
  std::map<AdmissibleTriple, std::unique_ptr<NetworkMap>> projections;
};

ClebschCache& clebsch_cache() {
  static ClebschCache cache;
  return cache;
}

template <class Build>
const NetworkMap& memoized(std::map<AdmissibleTriple, std::unique_ptr<NetworkMap>>& table,
                           const AdmissibleTriple& t, Build build) {
  auto& cache = clebsch_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = table.find(t);
    if (it != table.end()) return *it->second;
  }
  auto built = std::make_unique<NetworkMap>(build());
  std::lock_guard lock(cache.mu);
  auto [it, inserted] = table.emplace(t, std::move(built));
  return *it->second;
}

}  // namespace

const NetworkMap& clebsch_injection(const AdmissibleTriple& t) {
  return memoized(clebsch_cache().injections, t, [&t] {
    // (sym_a (x) sym_b) o (id^beta (x) CUP_gamma (x) id^alpha) o sym_c
    NetworkMap m = act_on_legs(nested_cups(t.gamma()), t.beta(), symmetrizer(t.c()));
    m = act_on_legs(symmetrizer(t.a()), 0, m);
    return act_on_legs(symmetrizer(t.b()), t.a(), m);
  });
}

const NetworkMap& clebsch_projection(const AdmissibleTriple& t) {
  return memoized(clebsch_cache().projections, t, [&t] {
    // sym_c o (id^beta (x) CAP_gamma (x) id^alpha) o (sym_a (x) sym_b)
    NetworkMap m = tensor(NetworkMap::identity(t.beta()), tensor(nested_caps(t.gamma()), NetworkMap::identity(t.alpha())));
    m = precompose_on_legs(m, 0, symmetrizer(t.a()));
    m = precompose_on_legs(m, t.a(), symmetrizer(t.b()));
    return act_on_legs(symmetrizer(t.c()), 0, m);
  });
}

Rational central_function_numeric(const AdmissibleTriple& t, const Mat2& x1, const Mat2& x2) {
  if (!x1.is_unimodular() || !x2.is_unimodular()) throw DomainError("central functions need det X = 1");
  NetworkMap m = act_on_legs(matrix_strand(x1, t.a()), 0, clebsch_injection(t));
  m = act_on_legs(matrix_strand(x2, t.b()), t.a(), m);
  m = act_on_legs(clebsch_projection(t), 0, m);
  return trace_closure(m);
}

}  // namespace spinnet
