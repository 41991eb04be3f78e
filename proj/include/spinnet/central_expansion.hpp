#pragma once

#include "spinnet/combinatorics.hpp"
#include "spinnet/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace spinnet {

/// Finite rational combination of central functions chi_abc. Keys are
/// admissible by construction and zero coefficients are dropped.
class CentralExpansion {
public:
  using TermMap = std::map<AdmissibleTriple, Rational>;

  CentralExpansion() = default;
  static CentralExpansion single(const AdmissibleTriple& t, const Rational& c = 1);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const AdmissibleTriple& t) const;

  void add(const AdmissibleTriple& t, const Rational& c);
  /// Adds c * chi_abc; throws DomainError when (a,b,c) is not admissible.
  void add(int a, int b, int c, const Rational& coeff);

  CentralExpansion& operator+=(const CentralExpansion& o);
  CentralExpansion& operator*=(const Rational& c);
  friend CentralExpansion operator+(CentralExpansion a, const CentralExpansion& b) { return a += b; }
  friend CentralExpansion operator*(CentralExpansion a, const Rational& c) { return a *= c; }
  friend bool operator==(const CentralExpansion&, const CentralExpansion&) = default;

  /// Terms ordered by delta descending, then by triple descending.
  std::vector<std::pair<AdmissibleTriple, Rational>> display_order() const;

private:
  TermMap terms_;
};

/// e.g. "χ112 + 1/2 χ110"; labels of ten or more render as χ(a,b,c).
std::string to_string(const CentralExpansion& e);

}  // namespace spinnet
