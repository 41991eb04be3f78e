#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "spinnet/combinatorics.hpp"
#include "spinnet/diagrams.hpp"
#include "spinnet/errors.hpp"

using namespace spinnet;

TEST_CASE("admissibility") {
  CHECK(is_admissible(1, 1, 0));
  CHECK_FALSE(is_admissible(1, 1, 1));
  CHECK_FALSE(is_admissible(1, 2, 4));
  CHECK_FALSE(is_admissible(-1, 1, 0));
  CHECK(is_admissible(0, 0, 0));
  CHECK_THROWS_AS(AdmissibleTriple::make(1, 1, 1), DomainError);
  CHECK_FALSE(AdmissibleTriple::try_make(1, 2, 4).has_value());
}

TEST_CASE("strand numbers") {
  auto s = strand_numbers(AdmissibleTriple::make(1, 2, 3));
  CHECK(s.alpha == 2);
  CHECK(s.beta == 1);
  CHECK(s.gamma == 0);
  CHECK(s.delta == 3);
  for (int a = 0; a <= 5; ++a) {
    auto e = strand_numbers(AdmissibleTriple::make(a, a, 0));
    CHECK(e.alpha == 0);
    CHECK(e.beta == 0);
    CHECK(e.gamma == a);
    CHECK(e.delta == a);
  }
  auto t = strand_numbers(AdmissibleTriple::make(2, 2, 2));
  CHECK((t.alpha == 1 && t.beta == 1 && t.gamma == 1 && t.delta == 3));
}

TEST_CASE("strand numbers reassemble the labels") {
  for (const auto& t : triples_up_to(6)) {
    auto s = strand_numbers(t);
    CHECK(t.a() == s.beta + s.gamma);
    CHECK(t.b() == s.alpha + s.gamma);
    CHECK(t.c() == s.alpha + s.beta);
    CHECK(s.delta == s.alpha + s.beta + s.gamma);
  }
}

TEST_CASE("cg_range") {
  CHECK(cg_range(1, 1) == std::vector<int>{2, 0});
  CHECK(cg_range(0, 4) == std::vector<int>{4});
  CHECK(cg_range(2, 3) == std::vector<int>{5, 3, 1});
  CHECK_THROWS_AS(cg_range(-1, 2), DomainError);
  // Dimensions add up: (a+1)(b+1) = sum of (c+1).
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      int dim = 0;
      for (int c : cg_range(a, b)) {
        CHECK(is_admissible(a, b, c));
        dim += c + 1;
      }
      CHECK(dim == (a + 1) * (b + 1));
    }
}

TEST_CASE("triple enumeration") {
  // Brute-force count of admissible triples at each degree.
  for (int d = 0; d <= 6; ++d) {
    std::size_t n = 0;
    for (int a = 0; a <= 2 * d; ++a)
      for (int b = 0; b <= 2 * d; ++b) {
        int c = 2 * d - a - b;
        if (c >= 0 && is_admissible(a, b, c)) ++n;
      }
    CHECK(triples_with_delta(d).size() == n);
  }
  auto all = triples_up_to(3);
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.delta() < r.delta(); }));
}

TEST_CASE("theta") {
  CHECK(theta(1, 2, 3) == 4);
  CHECK(theta(0, 0, 0) == 1);
  CHECK(theta(2, 2, 2) == 3);
  CHECK_THROWS_AS(theta(1, 1, 1), DomainError);
  for (int a = 0; a <= 8; ++a) CHECK(theta(1, a, a + 1) == a + 2);
  for (const auto& t : triples_up_to(7)) {
    CHECK(theta(t) == oracle::theta(t.a(), t.b(), t.c()));
    CHECK(theta(t) == theta(t.b(), t.c(), t.a()));
    CHECK(theta(t) == theta(t.b(), t.a(), t.c()));
  }
}

TEST_CASE("theta matches the closed theta network") {
  for (const auto& t : triples_up_to(4)) {
    Rational closed = trace_closure(compose(clebsch_projection(t), clebsch_injection(t)));
    CHECK(closed == theta(t));
  }
  CHECK(trace_closure(compose(clebsch_projection(AdmissibleTriple::make(2, 2, 2)),
                              clebsch_injection(AdmissibleTriple::make(2, 2, 2)))) == 3);
}

TEST_CASE("delta_dim") {
  CHECK(delta_dim(0) == 1);
  CHECK(delta_dim(5) == 6);
  for (int c = 0; c < 20; ++c) CHECK(delta_dim(c) == c + 1);
  CHECK_THROWS_AS(delta_dim(-1), DomainError);
}

TEST_CASE("factorials and binomials") {
  for (int n = 0; n <= 30; ++n) {
    CHECK(factorial(n) == oracle::fact(n));
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
  }
  int old = factorial_cache_size();
  set_factorial_cache_size(4);
  CHECK(factorial(12) == oracle::fact(12));
  set_factorial_cache_size(old);
  CHECK_THROWS_AS(factorial(-1), DomainError);
}
