#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "spinnet/combinatorics.hpp"
#include "spinnet/diagrams.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/irrep_map.hpp"
#include "spinnet/recoupling.hpp"

using namespace spinnet;
using oracle::q;

namespace {

NetworkMap expansion(int e_shift, int a, int b, int c, SignConvention conv) {
  NetworkMap sum = h_tree(1, a, b, c, c + e_shift) * Rational(0);
  for (const auto& t : recoupling_1abc(e_shift, a, b, c, conv)) sum += fused_tree(1, a, b, c, t.target) * t.coefficient;
  return sum;
}

Rational coefficient_for(const std::vector<RecouplingTerm>& terms, int target) {
  for (const auto& t : terms)
    if (t.target == target) return t.coefficient;
  return 0;
}

// Coefficient of the f fused tree in the H-tree, by least squares against the
// orthogonal fused trees: <H, F_f> / <F_f, F_f> with the entrywise inner product.
Rational dense_coefficient(int a, int b, int c, int d, int e, int f) {
  NetworkMap h = h_tree(a, b, c, d, e), g = fused_tree(a, b, c, d, f);
  Rational hg = 0, gg = 0;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t col = 0; col < h.cols(); ++col) {
      hg += h(r, col) * g(r, col);
      gg += g(r, col) * g(r, col);
    }
  return hg / gg;
}

}  // namespace

TEST_CASE("key validity") {
  CHECK(is_valid({1, 1, 1, 1, 0, 0}));
  CHECK_FALSE(is_valid({1, 1, 1, 1, 1, 1}));
  CHECK(to_string(SixJKey{1, 2, 3, 2, 3, 3}) == "{1 2 3; 2 3 3}");
  CHECK_THROWS_AS(sixj_general({1, 1, 1, 1, 1, 1}), DomainError);
}

TEST_CASE("closed form with both shifts up is 1") {
  for (int a = 0; a <= 4; ++a)
    for (int c = 0; c <= 4; ++c)
      for (int b = 0; b <= 6; ++b) {
        SixJKey k{1, a, b, c + 1, c, a + 1};
        if (!is_valid(k)) continue;
        CHECK(sixj_special(a, b, c, 1, 1) == 1);
        CHECK(sixj_general(k) == 1);
      }
}

TEST_CASE("an inadmissible closed-form configuration is rejected") {
  // {1 2 1; 1 2 1} contains the odd triple (1,1,1).
  CHECK_FALSE(is_valid({1, 2, 1, 1, 2, 1}));
  CHECK_THROWS_AS(sixj_special(2, 1, 2, -1, -1), DomainError);
  CHECK_THROWS_AS(sixj_special(2, 1, 2, 0, 1), DomainError);
}

TEST_CASE("closed form with c down and a up") {
  CHECK(sixj_special(2, 3, 3, -1, 1, SignConvention::alternating) == q(-2, 3));
  CHECK(sixj_special(2, 3, 3, -1, 1) == q(2, 3));
  CHECK(sixj_general({1, 2, 3, 2, 3, 3}) == q(2, 3));
}

TEST_CASE("closed forms agree with the contraction for every family") {
  for (int a = 0; a <= 4; ++a)
    for (int c = 0; c <= 4; ++c)
      for (int b = 0; b <= a + c + 2; ++b)
        for (int cs : {1, -1})
          for (int as : {1, -1}) {
            SixJKey k{1, a, b, c + cs, c, a + as};
            if (!is_valid(k)) continue;
            CAPTURE(to_string(k));
            Rational g = sixj_general(k);
            CHECK(sixj_special(a, b, c, cs, as) == g);
            CHECK(abs(sixj_special(a, b, c, cs, as, SignConvention::alternating)) == abs(g));
          }
}

TEST_CASE("general symbol matches the dense computation") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          for (int e = 0; e <= 3; ++e)
            for (int f = 0; f <= 3; ++f) {
              SixJKey k{a, b, c, d, e, f};
              if (!is_valid(k)) continue;
              CAPTURE(to_string(k));
              CHECK(sixj_general_dense(k) == sixj_general(k));
              CHECK(sixj_prime_dense(k) == sixj_prime(k));
            }
}

TEST_CASE("degenerate keys") {
  for (int a = 0; a <= 4; a += 2) CHECK(sixj_general({a, 0, a, a, a, a}) == 1);
  // Label 0 in the b slot forces e = c and f = a.
  for (int a = 0; a <= 3; ++a)
    for (int c = 0; c <= 3; ++c)
      for (int d : cg_range(a, c)) CHECK(sixj_general({a, 0, c, d, c, a}) == 1);
}

TEST_CASE("primed relation") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (int e = 0; e <= 4; ++e)
            for (int f = 0; f <= 4; ++f) {
              SixJKey k{a, b, c, d, e, f};
              if (!is_valid(k)) continue;
              int s = ((b + d - e - f) / 2) % 2 == 0 ? 1 : -1;
              CHECK(sixj_prime(k) == sixj_general(k) * Rational(s));
            }
}

TEST_CASE("primed symbol is the H-tree coefficient") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          for (int e = 0; e <= 3; ++e) {
            if (!is_admissible(a, e, d) || !is_admissible(e, c, b)) continue;
            for (int f : cg_range(a, b)) {
              if (!is_admissible(d, c, f)) continue;
              CHECK(sixj_prime({a, b, c, d, e, f}) == dense_coefficient(a, b, c, d, e, f));
            }
          }
}

TEST_CASE("two-term expansion examples") {
  auto alternating = recoupling_1abc(-1, 2, 1, 2, SignConvention::alternating);
  CHECK(coefficient_for(alternating, 3) == 1);
  CHECK(coefficient_for(alternating, 1) == q(-1, 3));
  auto uniform = recoupling_1abc(-1, 2, 1, 2);
  CHECK(coefficient_for(uniform, 1) == q(1, 3));
  CHECK(h_tree(1, 2, 1, 2, 1) == expansion(-1, 2, 1, 2, SignConvention::uniform));
  CHECK(h_tree(1, 2, 1, 2, 1) != expansion(-1, 2, 1, 2, SignConvention::alternating));

  CHECK(coefficient_for(recoupling_1abc(1, 1, 1, 1, SignConvention::alternating), 2) == q(-1, 2));
  CHECK(coefficient_for(recoupling_1abc(1, 1, 1, 1), 2) == q(-1, 2));
  CHECK(h_tree(1, 1, 1, 1, 2) == expansion(1, 1, 1, 1, SignConvention::uniform));
  CHECK(h_tree(1, 1, 1, 1, 2) == expansion(1, 1, 1, 1, SignConvention::alternating));
}

TEST_CASE("inadmissible targets are dropped") {
  auto up_only = recoupling_1abc(-1, 0, 2, 3);
  REQUIRE(up_only.size() == 1);
  CHECK(up_only[0].target == 1);
  CHECK(recoupling_1abc(1, 0, 1, 0).size() == 1);
  CHECK_THROWS_AS(recoupling_1abc(0, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(recoupling_1abc(1, 1, 1, 0), DomainError);
}

TEST_CASE("two-term expansions hold entrywise") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int es : {-1, 1}) {
          int e = c + es;
          if (e < 0 || !is_admissible(1, e, c) || !is_admissible(e, b, a)) continue;
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CAPTURE(es);
          CHECK(h_tree(1, a, b, c, e) == expansion(es, a, b, c, SignConvention::uniform));
        }
}

TEST_CASE("reduced trees match the dense trees in the irrep basis") {
  CHECK(to_irrep_basis(h_tree(1, 2, 1, 2, 1), {2, 1}, {1, 2}) == h_tree_reduced(1, 2, 1, 2, 1));
  CHECK(to_irrep_basis(fused_tree(1, 2, 1, 2, 3), {2, 1}, {1, 2}) == fused_tree_reduced(1, 2, 1, 2, 3));
}
