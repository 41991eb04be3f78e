#include "spinnet/combinatorics.hpp"

#include "spinnet/errors.hpp"

#include <atomic>

namespace spinnet {

bool is_admissible(long a, long b, long c) noexcept {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return a <= b + c && b <= a + c && c <= a + b;
}

AdmissibleTriple AdmissibleTriple::make(int a, int b, int c) {
  if (!is_admissible(a, b, c)) {
    throw DomainError("triple (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                      ") is not admissible");
  }
  return AdmissibleTriple(a, b, c);
}

std::optional<AdmissibleTriple> AdmissibleTriple::try_make(int a, int b, int c) noexcept {
  if (!is_admissible(a, b, c)) return std::nullopt;
  return AdmissibleTriple(a, b, c);
}

std::string label(const AdmissibleTriple& t) {
  if (t.a() < 10 && t.b() < 10 && t.c() < 10) {
    return std::to_string(t.a()) + std::to_string(t.b()) + std::to_string(t.c());
  }
  return "(" + std::to_string(t.a()) + "," + std::to_string(t.b()) + "," + std::to_string(t.c()) + ")";
}

StrandNumbers strand_numbers(const AdmissibleTriple& t) noexcept {
  return {t.alpha(), t.beta(), t.gamma(), t.delta()};
}

std::vector<int> cg_range(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("cg_range: negative label");
  std::vector<int> out;
  for (int c = a + b; c >= (a > b ? a - b : b - a); c -= 2) out.push_back(c);
  return out;
}

std::vector<AdmissibleTriple> triples_with_delta(int delta) {
  std::vector<AdmissibleTriple> out;
  if (delta < 0) return out;
  for (int a = 0; a <= delta; ++a) {
    for (int b = 0; b <= delta; ++b) {
      int c = 2 * delta - a - b;
      if (auto t = AdmissibleTriple::try_make(a, b, c)) out.push_back(*t);
    }
  }
  return out;
}

std::vector<AdmissibleTriple> triples_up_to(int max_delta) {
  std::vector<AdmissibleTriple> out;
  for (int d = 0; d <= max_delta; ++d) {
    auto layer = triples_with_delta(d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

namespace {

std::atomic<int> g_factorial_cache_size{256};

const std::vector<Integer>& factorial_table() {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(static_cast<std::size_t>(g_factorial_cache_size.load()));
    if (!t.empty()) t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<unsigned long>(i);
    return t;
  }();
  return table;
}

}  // namespace

int factorial_cache_size() noexcept { return g_factorial_cache_size.load(); }

void set_factorial_cache_size(int n) {
  if (n < 1) throw DomainError("factorial cache size must be positive");
  g_factorial_cache_size.store(n);
}

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  const auto& t = factorial_table();
  if (static_cast<std::size_t>(n) < t.size()) return t[n];
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational theta(const AdmissibleTriple& t) {
  Integer num = factorial(t.alpha()) * factorial(t.beta()) * factorial(t.gamma()) *
                factorial(t.delta() + 1);
  Integer den = factorial(t.a()) * factorial(t.b()) * factorial(t.c());
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational theta(int a, int b, int c) { return theta(AdmissibleTriple::make(a, b, c)); }

Rational delta_dim(int c) {
  if (c < 0) throw DomainError("delta_dim of a negative label");
  return Rational(c + 1);
}

}  // namespace spinnet
