#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "spinnet/combinatorics.hpp"
#include "spinnet/diagrams.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/mat2.hpp"

using namespace spinnet;
using oracle::q;

namespace {

// Basis vector e_i of V^(x)n as a 0 -> n map; leg 0 is the most significant bit.
NetworkMap basis(std::size_t index, int n) {
  NetworkMap v(0, n);
  v(index, 0) = 1;
  return v;
}

NetworkMap apply(const NetworkMap& f, const NetworkMap& v) { return compose(f, v); }

}  // namespace

TEST_CASE("cap_vertex is the determinant") {
  NetworkMap det = primitive(Primitive::cap_vertex);
  CHECK(apply(det, basis(0b01, 2)).value() == 1);
  CHECK(apply(det, basis(0b10, 2)).value() == -1);
  // v (x) v for v = 3e1 - 2e2
  NetworkMap v(0, 1);
  v(0, 0) = 3;
  v(1, 0) = -2;
  CHECK(apply(det, tensor(v, v)).value() == 0);
}

TEST_CASE("swap exchanges factors") {
  CHECK(apply(primitive(Primitive::swap), basis(0b01, 2)) == basis(0b10, 2));
  CHECK(compose(primitive(Primitive::swap), primitive(Primitive::swap)) == NetworkMap::identity(2));
}

TEST_CASE("compose and tensor") {
  NetworkMap f = primitive(Primitive::swap);
  CHECK(compose(NetworkMap::identity(2), f) == f);
  CHECK(compose(f, NetworkMap::identity(2)) == f);
  CHECK(compose(primitive(Primitive::cap), primitive(Primitive::cup)).value() == 2);
  CHECK(compose(primitive(Primitive::cap_vertex), primitive(Primitive::cup_vertex)).value() == 2);
  CHECK_THROWS_AS(compose(primitive(Primitive::cap), NetworkMap::identity(1)), DomainError);
  CHECK(tensor(NetworkMap::identity(1), NetworkMap::identity(2)) == NetworkMap::identity(3));
  CHECK_THROWS_AS(NetworkMap::identity(1).value(), DomainError);
}

TEST_CASE("binor identity") {
  NetworkMap swap = primitive(Primitive::swap);
  NetworkMap e = compose(primitive(Primitive::cup_vertex), primitive(Primitive::cap_vertex));
  CHECK(swap == NetworkMap::identity(2) - e);
}

TEST_CASE("symmetrizer") {
  CHECK(symmetrizer(1) == NetworkMap::identity(1));
  CHECK(symmetrizer(2) == (NetworkMap::identity(2) + primitive(Primitive::swap)) * q(1, 2));
  CHECK(oracle::rank(symmetrizer(3)) == 4);
  for (int n = 0; n <= 5; ++n) {
    const NetworkMap& s = symmetrizer(n);
    CHECK(s == symmetrizer_by_permutations(n));
    CHECK(compose(s, s) == s);
    CHECK(oracle::rank(s) == static_cast<std::size_t>(n + 1));
    CHECK(trace_closure(s) == n + 1);
  }
}

TEST_CASE("strand cap") {
  int old = strand_cap();
  set_strand_cap(6);
  CHECK_THROWS_AS(NetworkMap(4, 4), ResourceError);
  CHECK_THROWS_AS(symmetrizer_by_permutations(4), ResourceError);
  set_strand_cap(old);
  CHECK_THROWS_AS(set_strand_cap(1), DomainError);
}

TEST_CASE("matrix_strand") {
  Mat2 x(2, 3, 1, 2);
  for (int n = 0; n <= 4; ++n) CHECK(matrix_strand(Mat2::identity(), n) == symmetrizer(n));
  NetworkMap m = matrix_strand(x, 1);
  CHECK(apply(m, basis(0, 1)) == apply(matrix_map(x), basis(0, 1)));
  CHECK(m(0, 1) == 3);
  CHECK(m(1, 0) == 1);
  CHECK(trace_closure(m) == x.trace());
  // Functoriality on Sym^n.
  Mat2 y(1, -2, 1, -1);
  CHECK(compose(matrix_strand(x, 3), matrix_strand(y, 3)) == matrix_strand(x * y, 3));
}

TEST_CASE("clebsch injection") {
  CHECK(clebsch_injection(AdmissibleTriple::make(1, 0, 1)) == NetworkMap::identity(1));
  NetworkMap cup = clebsch_injection(AdmissibleTriple::make(1, 1, 0));
  CHECK(cup == primitive(Primitive::cup_vertex));
  CHECK(cup(0b01, 0) == 1);
  CHECK(cup(0b10, 0) == -1);
  CHECK(clebsch_injection(AdmissibleTriple::make(1, 1, 2)) == symmetrizer(2));
  CHECK_THROWS_AS(clebsch_injection(AdmissibleTriple::make(1, 1, 1)), DomainError);
}

TEST_CASE("bubble: projection after injection is a multiple of the symmetrizer") {
  for (const auto& t : triples_up_to(4)) {
    NetworkMap pi = compose(clebsch_projection(t), clebsch_injection(t));
    CHECK(pi == symmetrizer(t.c()) * (theta(t) / delta_dim(t.c())));
  }
}

TEST_CASE("closed networks") {
  CHECK(contract_closed(compose(primitive(Primitive::cap), primitive(Primitive::cup))) == 2);
  for (int n = 0; n <= 6; ++n) CHECK(trace_closure(symmetrizer(n)) == n + 1);
  CHECK_THROWS_AS(contract_closed(primitive(Primitive::cap)), DomainError);
}

TEST_CASE("central_function_numeric") {
  UnimodularSampler s(7);
  for (int i = 0; i < 5; ++i) {
    Mat2 x1 = s.next(), x2 = s.next();
    CHECK(central_function_numeric(AdmissibleTriple::make(0, 0, 0), x1, x2) == 1);
    CHECK(central_function_numeric(AdmissibleTriple::make(1, 0, 1), x1, x2) == x1.trace());
    CHECK(central_function_numeric(AdmissibleTriple::make(0, 1, 1), x1, x2) == x2.trace());
    CHECK(central_function_numeric(AdmissibleTriple::make(1, 1, 0), x1, x2) == (x1 * x2.inverse()).trace());
  }
  for (const auto& t : triples_up_to(4))
    CHECK(central_function_numeric(t, Mat2::identity(), Mat2::identity()) == oracle::theta(t.a(), t.b(), t.c()));
  CHECK_THROWS_AS(central_function_numeric(AdmissibleTriple::make(1, 0, 1), Mat2(2, 0, 0, 1), Mat2::identity()),
                  DomainError);
}

TEST_CASE("central_function_numeric is a class function") {
  UnimodularSampler s(11);
  for (const auto& t : triples_up_to(3)) {
    Mat2 x1 = s.next(), x2 = s.next(), g = s.next();
    Mat2 gi = g.inverse();
    CHECK(central_function_numeric(t, g * x1 * gi, g * x2 * gi) == central_function_numeric(t, x1, x2));
  }
}
