#pragma once

#include "spinnet/central_expansion.hpp"
#include "spinnet/combinatorics.hpp"
#include "spinnet/mat2.hpp"
#include "spinnet/poly3.hpp"

#include <utility>

namespace spinnet {

/// chi_t1 * chi_t2 from the 6j structure constants.
CentralExpansion product_central(const AdmissibleTriple& t1, const AdmissibleTriple& t2);
/// Same product through polynomial multiplication and basis conversion.
CentralExpansion product_via_polynomials(const AdmissibleTriple& t1, const AdmissibleTriple& t2);

/// x^ex y^ey z^ez in the central basis, from the closed expansion. Memoized.
CentralExpansion monomial_to_central(int ex, int ey, int ez);
CentralExpansion poly_to_central(const Poly3& p);
/// Independent route: repeatedly cancel a top-degree monomial against the
/// monic central function that leads with it.
CentralExpansion poly_to_central_by_elimination(const Poly3& p);
Poly3 central_to_poly(const CentralExpansion& ce);

/// Matrices with traces (tau_x, tau_y, zeta + 1/zeta) for x, y, z.
std::pair<Mat2, Mat2> fricke_slice(const Rational& tau_x, const Rational& tau_y, const Rational& zeta);

}  // namespace spinnet
