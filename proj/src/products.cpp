#include "spinnet/products.hpp"

#include "spinnet/central_functions.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/recoupling.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace spinnet {

namespace {

Rational sixj(int a, int b, int c, int d, int e, int f) { return sixj_general({a, b, c, d, e, f}); }

// Delta(j)/Theta(a',b,j) times three 6j-symbols.
Rational structure_c(int a, int b, int c, int a2, int b2, int c2, int j, int k, int l, int m) {
  Rational w = delta_dim(j) / theta(a2, b, j);
  return w * sixj(a, a2, j, c, b, k) * sixj(b2, b, j, c2, a2, l) * sixj(k, l, c2, c, j, m);
}

}  // namespace

CentralExpansion product_central(const AdmissibleTriple& t1, const AdmissibleTriple& t2) {
  const int a = t1.a(), b = t1.b(), c = t1.c();
  const int a2 = t2.a(), b2 = t2.b(), c2 = t2.c();
  CentralExpansion out;
  for (int k : cg_range(a, a2)) {
    for (int l : cg_range(b, b2)) {
      for (int m : cg_range(c, c2)) {
        if (!is_admissible(k, l, m)) continue;
        // The double sum over j1, j2 factors as a square. Only the triples
        // carried by the three 6j-symbols constrain j.
        Rational s(0);
        for (int j : cg_range(a2, b)) {
          if (!is_admissible(c, j, k) || !is_admissible(c2, j, l)) continue;
          s += structure_c(a, b, c, a2, b2, c2, j, k, l, m);
        }
        if (is_zero(s)) continue;
        Rational w = theta(a, a2, k) * theta(b, b2, l) * theta(c, c2, m) /
                     (delta_dim(k) * delta_dim(l) * delta_dim(m));
        out.add(AdmissibleTriple::make(k, l, m), s * s * w);
      }
    }
  }
  return out;
}

CentralExpansion product_via_polynomials(const AdmissibleTriple& t1, const AdmissibleTriple& t2) {
  return poly_to_central(central_function(t1) * central_function(t2));
}

namespace {

Integer ballot(int n, int r) { return binomial(n, r) - binomial(n, r - 1); }

CentralExpansion monomial_expansion(int ex, int ey, int ez) {
  CentralExpansion out;
  for (int r = 0; 2 * r <= ex; ++r) {
    for (int s = 0; 2 * s <= ey; ++s) {
      for (int t = 0; 2 * t <= ez; ++t) {
        const int a = ex - 2 * r, b = ey - 2 * s, c = ez - 2 * t;
        Rational w(ballot(ex, r) * ballot(ey, s) * ballot(ez, t));
        for (int k : cg_range(a, c)) {
          for (int l : cg_range(b, c)) {
            for (int m : cg_range(a, b)) {
              if (!is_admissible(k, l, m)) continue;
              Rational six = sixj_general({a, c, l, m, b, k});
              if (is_zero(six)) continue;
              Rational f = delta_dim(l) * delta_dim(m) * theta(a, c, k) /
                           (delta_dim(k) * theta(a, b, m) * theta(b, c, l));
              out.add(AdmissibleTriple::make(k, l, m), w * f * six * six);
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

CentralExpansion monomial_to_central(int ex, int ey, int ez) {
  if (ex < 0 || ey < 0 || ez < 0) throw DomainError("monomial_to_central: negative exponent");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, CentralExpansion> memo;
  const auto key = std::make_tuple(ex, ey, ez);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  CentralExpansion e = monomial_expansion(ex, ey, ez);
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(e)).first->second;
}

CentralExpansion poly_to_central(const Poly3& p) {
  CentralExpansion out;
  for (const auto& [e, c] : p.terms()) out += monomial_to_central(e.x, e.y, e.z) * c;
  return out;
}

CentralExpansion poly_to_central_by_elimination(const Poly3& p) {
  CentralExpansion out;
  Poly3 rest = p;
  while (!rest.is_zero()) {
    auto top = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.degree() > top->first.degree()) top = it;
    const Exponents e = top->first;
    const Rational c = top->second;
    // x^beta y^alpha z^gamma leads chi_abc.
    auto t = AdmissibleTriple::make(e.x + e.z, e.y + e.z, e.x + e.y);
    out.add(t, c);
    rest -= central_function(t) * c;
  }
  return out;
}

Poly3 central_to_poly(const CentralExpansion& ce) {
  Poly3 out;
  for (const auto& [t, c] : ce.terms()) out += central_function(t) * c;
  return out;
}

std::pair<Mat2, Mat2> fricke_slice(const Rational& tau_x, const Rational& tau_y, const Rational& zeta) {
  if (is_zero(zeta)) throw DomainError("fricke_slice: zeta must be nonzero");
  return {Mat2(tau_x, 1, -1, 0), Mat2(tau_y, 1 / zeta, -zeta, 0)};
}

}  // namespace spinnet
