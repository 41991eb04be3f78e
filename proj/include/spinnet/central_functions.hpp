#pragma once

#include "spinnet/central_expansion.hpp"
#include "spinnet/combinatorics.hpp"
#include "spinnet/poly3.hpp"

#include <array>
#include <vector>

namespace spinnet {

// Rank one.

/// chi^n as a polynomial in x: sum_r (-1)^r C(n-r, r) x^(n-2r).
Poly3 chi_rank1(int n);
/// [n+1]_lambda = (lambda^(n+1) - lambda^-(n+1)) / (lambda - 1/lambda); lambda != 0, +-1.
Rational chi_rank1_eigen(int n, const Rational& lambda);
/// The labels c with chi^a chi^b = sum chi^c, largest first.
std::vector<int> rank1_product_range(int a, int b);

// Rank two.

/// sigma acts on triples by (t[sigma[0]], t[sigma[1]], t[sigma[2]]).
using Perm3 = std::array<int, 3>;
const std::array<Perm3, 6>& all_perm3();
AdmissibleTriple permute(const Perm3& sigma, const AdmissibleTriple& t);

/// Polynomial of chi_abc in x = tr X1, y = tr X2, z = tr(X1 X2^-1).
Poly3 central_function(const AdmissibleTriple& t);
Poly3 central_function(int a, int b, int c);  // throws DomainError

/// Polynomial of chi_sigma(t), obtained from that of chi_t by moving variables
/// along with the indices. Slot order of the variables is (y, x, z).
Poly3 apply_symmetry(const Perm3& sigma, const AdmissibleTriple& t);
Poly3 substitute_slots(const Perm3& sigma, const Poly3& p);

/// x^beta y^alpha z^gamma.
Exponents leading_monomial(const AdmissibleTriple& t) noexcept;

struct Grading {
  int first, second;
  friend bool operator==(const Grading&, const Grading&) = default;
};
Grading grading(const AdmissibleTriple& t) noexcept;
Grading grading(Exponents e) noexcept;

/// x * chi_abc as at most four central functions.
CentralExpansion multiply_by_x(const AdmissibleTriple& t);

/// Number of memoized polynomials; clear_central_cache() empties the table.
std::size_t central_cache_size();
void clear_central_cache();

}  // namespace spinnet
