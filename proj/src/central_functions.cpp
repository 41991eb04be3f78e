#include "spinnet/central_functions.hpp"

#include "spinnet/errors.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace spinnet {

Poly3 chi_rank1(int n) {
  if (n < 0) throw DomainError("chi_rank1: negative degree");
  Poly3 p;
  for (int r = 0; 2 * r <= n; ++r) {
    Rational c(binomial(n - r, r));
    if (r % 2) c = -c;
    p.add_term({n - 2 * r, 0, 0}, c);
  }
  return p;
}

namespace {

Rational rpow(const Rational& v, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= v;
  return out;
}

}  // namespace

Rational chi_rank1_eigen(int n, const Rational& lambda) {
  if (n < 0) throw DomainError("chi_rank1_eigen: negative degree");
  if (is_zero(lambda) || abs(lambda) == 1) throw DomainError("chi_rank1_eigen: lambda must not be 0 or +-1");
  Rational inv = 1 / lambda;
  return (rpow(lambda, n + 1) - rpow(inv, n + 1)) / (lambda - inv);
}

std::vector<int> rank1_product_range(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("rank1_product_range: negative label");
  std::vector<int> out;
  for (int c = a + b; c >= std::abs(a - b); c -= 2) out.push_back(c);
  return out;
}

const std::array<Perm3, 6>& all_perm3() {
  static const std::array<Perm3, 6> perms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  return perms;
}

AdmissibleTriple permute(const Perm3& sigma, const AdmissibleTriple& t) {
  return AdmissibleTriple::make(t[sigma[0]], t[sigma[1]], t[sigma[2]]);
}

namespace {

int slot(const Exponents& e, int i) { return i == 0 ? e.y : i == 1 ? e.x : e.z; }

struct ChiTable {
  std::mutex mu;
  std::map<AdmissibleTriple, Poly3> memo;
};

ChiTable& table() {
  static ChiTable t;
  return t;
}

Poly3 compute(const AdmissibleTriple& t);

Poly3 lookup(const AdmissibleTriple& t) {
  auto& tab = table();
  {
    std::lock_guard lock(tab.mu);
    if (auto it = tab.memo.find(t); it != tab.memo.end()) return it->second;
  }
  Poly3 p = compute(t);
  std::lock_guard lock(tab.mu);
  return tab.memo.emplace(t, std::move(p)).first->second;
}

void add_if_admissible(Poly3& acc, int a, int b, int c, const Rational& coeff) {
  if (is_zero(coeff)) return;
  if (auto t = AdmissibleTriple::try_make(a, b, c)) acc += lookup(*t) * coeff;
}

Poly3 compute(const AdmissibleTriple& t) {
  if (t.delta() == 0) return Poly3::constant(1);
  if (t.beta() == 0) {
    // Move a positive strand number into the middle slot; both choices are involutions.
    Perm3 sigma = t.alpha() > 0 ? Perm3{1, 0, 2} : Perm3{0, 2, 1};
    return substitute_slots(sigma, lookup(permute(sigma, t)));
  }
  const int a = t.a(), b = t.b(), c = t.c();
  Poly3 p = Poly3::x() * lookup(AdmissibleTriple::make(a - 1, b, c - 1));
  if (a > 1) {
    Rational k(mpz_class((a + b - c) * (a + b - c)), mpz_class(4 * a * (a - 1)));
    k.canonicalize();
    add_if_admissible(p, a - 2, b, c, -k);
  }
  if (c > 1) {
    Rational k(mpz_class((-a + b + c) * (-a + b + c)), mpz_class(4 * c * (c - 1)));
    k.canonicalize();
    add_if_admissible(p, a, b, c - 2, -k);
  }
  if (a > 1 && c > 1) {
    mpz_class s = a + b + c, d = a - b + c - 2;
    Rational k(s * s * d * d, mpz_class(16) * a * (a - 1) * c * (c - 1));
    k.canonicalize();
    add_if_admissible(p, a - 2, b, c - 2, -k);
  }
  return p;
}

}  // namespace

Poly3 central_function(const AdmissibleTriple& t) { return lookup(t); }

Poly3 central_function(int a, int b, int c) { return lookup(AdmissibleTriple::make(a, b, c)); }

Poly3 substitute_slots(const Perm3& sigma, const Poly3& p) {
  Poly3 out;
  for (const auto& [e, c] : p.terms()) {
    int s[3] = {slot(e, sigma[0]), slot(e, sigma[1]), slot(e, sigma[2])};
    out.add_term({s[1], s[0], s[2]}, c);
  }
  return out;
}

Poly3 apply_symmetry(const Perm3& sigma, const AdmissibleTriple& t) {
  return substitute_slots(sigma, central_function(t));
}

Exponents leading_monomial(const AdmissibleTriple& t) noexcept {
  return {t.beta(), t.alpha(), t.gamma()};
}

Grading grading(const AdmissibleTriple& t) noexcept { return {t.a() % 2, t.b() % 2}; }

Grading grading(Exponents e) noexcept { return {(e.x + e.z) % 2, (e.y + e.z) % 2}; }

CentralExpansion multiply_by_x(const AdmissibleTriple& t) {
  const int a = t.a(), b = t.b(), c = t.c();
  CentralExpansion out;
  auto put = [&](int p, int q, int r, Rational k) {
    k.canonicalize();
    if (auto s = AdmissibleTriple::try_make(p, q, r)) out.add(*s, k);
  };
  put(a + 1, b, c + 1, 1);
  if (a > 0) put(a - 1, b, c + 1, Rational(mpz_class((a + b - c) * (a + b - c)), mpz_class(4 * a * (a + 1))));
  if (c > 0) put(a + 1, b, c - 1, Rational(mpz_class((-a + b + c) * (-a + b + c)), mpz_class(4 * c * (c + 1))));
  if (a > 0 && c > 0) {
    mpz_class s = a + b + c + 2, d = a - b + c;
    put(a - 1, b, c - 1, Rational(s * s * d * d, mpz_class(16) * a * (a + 1) * c * (c + 1)));
  }
  return out;
}

std::size_t central_cache_size() {
  std::lock_guard lock(table().mu);
  return table().memo.size();
}

void clear_central_cache() {
  std::lock_guard lock(table().mu);
  table().memo.clear();
}

}  // namespace spinnet
