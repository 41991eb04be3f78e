#pragma once

#include "spinnet/rational.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <string>

namespace spinnet {

/// Exponents of x^ex y^ey z^ez. Ordered lexicographically in (x, y, z).
struct Exponents {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const noexcept { return x + y + z; }
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/// Sparse polynomial in x = tr X1, y = tr X2, z = tr(X1 X2^-1) with exact
/// rational coefficients. Zero coefficients are never stored.
class Poly3 {
public:
  using TermMap = std::map<Exponents, Rational>;

  Poly3() = default;
  Poly3(std::initializer_list<std::pair<const Exponents, Rational>> terms);

  static Poly3 constant(const Rational& c);
  static Poly3 monomial(Exponents e, const Rational& c = 1);
  static Poly3 x() { return monomial({1, 0, 0}); }
  static Poly3 y() { return monomial({0, 1, 0}); }
  static Poly3 z() { return monomial({0, 0, 1}); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(Exponents e) const;
  int total_degree() const;

  /// Adds c * x^e.x y^e.y z^e.z in place.
  void add_term(Exponents e, const Rational& c);

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Rational& c);
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(Poly3 a, const Rational& c) { return a *= c; }
  friend Poly3 operator*(const Rational& c, Poly3 a) { return a *= c; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  Poly3 operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Poly3&, const Poly3&) = default;

  Poly3 pow(int n) const;

private:
  TermMap terms_;
};

/// Exact substitution.
Rational poly_eval(const Poly3& p, const Rational& x, const Rational& y, const Rational& z);

/// Human-readable form, highest total degree first, e.g. "x^2*y - 2/3*x*z - 2/3*y".
std::string to_string(const Poly3& p);

}  // namespace spinnet
