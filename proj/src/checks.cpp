#include "spinnet/checks.hpp"

#include "spinnet/central_functions.hpp"
#include "spinnet/diagrams.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/poly_parse.hpp"
#include "spinnet/products.hpp"
#include "spinnet/recoupling.hpp"

#include <algorithm>
#include <functional>

namespace spinnet {

namespace {

// Accumulates cases of one identity family and keeps the first failure.
class Tally {
public:
  explicit Tally(std::string name) { check_.name = std::move(name); }

  Tally& param(const std::string& k, long v) {
    check_.params.emplace_back(k, std::to_string(v));
    return *this;
  }

  void expect(bool ok, const std::function<std::string()>& why) {
    ++check_.cases;
    if (!ok && check_.pass) {
      check_.pass = false;
      check_.details = why();
    }
  }

  Check done() {
    if (check_.pass) check_.details = std::to_string(check_.cases) + " cases";
    return std::move(check_);
  }

private:
  Check check_;
};

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string triple_str(const AdmissibleTriple& t) { return triple_str(t.a(), t.b(), t.c()); }

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

// V_b (x) V_a -> V_a (x) V_b.
NetworkMap block_swap(int a, int b) {
  std::vector<int> p(a + b);
  for (int i = 0; i < a; ++i) p[i] = b + i;
  for (int j = 0; j < b; ++j) p[a + j] = j;
  return permutation(p);
}

NetworkMap zigzag(int n) {
  return act_on_legs(nested_caps(n), n, tensor(nested_cups(n), NetworkMap::identity(n)));
}

std::vector<std::pair<AdmissibleTriple, const char*>> reference_rows() {
  auto t = [](int a, int b, int c) { return AdmissibleTriple::make(a, b, c); };
  return {
      {t(0, 0, 0), "1"},
      {t(1, 0, 1), "x"},
      {t(2, 0, 2), "x^2-1"},
      {t(1, 1, 2), "xy-1/2 z"},
      {t(3, 0, 3), "x^3-2x"},
      {t(2, 1, 3), "x^2y-2/3(xz+y)"},
      {t(2, 2, 2), "xyz-1/2(x^2+y^2+z^2)+1"},
      {t(4, 0, 4), "x^4-3x^2+1"},
      {t(3, 1, 4), "x^3y-3/4x^2z-1/2(3xy-z)"},
      {t(2, 2, 4), "x^2y^2-xyz+1/6z^2-1/2(x^2+y^2)+1/3"},
      {t(3, 2, 3), "x^2yz-2/3(xz^2+xy^2)-1/2x^3-1/9(2yz-13x)"},
  };
}

}  // namespace

std::vector<Check> diagram_checks(const CheckOptions& opt) {
  std::vector<Check> out;
  const int cap = strand_cap();

  {
    Tally t("binor");
    NetworkMap rhs = NetworkMap::identity(2) - compose(primitive(Primitive::cup_vertex), primitive(Primitive::cap_vertex));
    t.expect(primitive(Primitive::swap) == rhs, [] { return "swap != id - cup o cap"; });
    out.push_back(t.done());
  }
  {
    Tally t("loop_value");
    t.expect(trace_closure(NetworkMap::identity(1)) == 2, [] { return "closed strand != 2"; });
    Rational v = compose(primitive(Primitive::cap_vertex), primitive(Primitive::cup_vertex)).value();
    t.expect(v == 2, [v] { return "cap o cup = " + to_string(v); });
    out.push_back(t.done());
  }
  const int nmax = std::min(opt.max_symmetrizer, cap / 2);
  {
    Tally t("symmetrizer_recurrence");
    t.param("max_n", nmax);
    for (int n = 0; n <= nmax; ++n)
      t.expect(symmetrizer(n) == symmetrizer_by_permutations(n), [n] { return "n=" + std::to_string(n); });
    out.push_back(t.done());
  }
  {
    Tally t("loop_dimension");
    t.param("max_n", nmax);
    for (int n = 0; n <= nmax; ++n) {
      Rational v = trace_closure(symmetrizer(n));
      t.expect(v == n + 1, [n, v] { return "n=" + std::to_string(n) + " gives " + to_string(v); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("looping");
    t.param("max_n", nmax);
    for (int n = 1; n <= nmax; ++n) {
      for (int k = 1; k <= n; ++k) {
        Rational w(n + 1, n - k + 1);
        w.canonicalize();
        t.expect(close_strands(symmetrizer(n), k) == symmetrizer(n - k) * w,
                 [n, k] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("capping");
    t.param("max_n", nmax);
    for (int n = 2; n <= nmax; ++n) {
      for (int i = 0; i + 2 <= n; ++i) {
        t.expect(act_on_legs(primitive(Primitive::cap_vertex), i, symmetrizer(n)).is_zero(),
                 [n, i] { return "cap at " + std::to_string(i) + " on n=" + std::to_string(n); });
        t.expect(precompose_on_legs(symmetrizer(n), i, primitive(Primitive::cup_vertex)).is_zero(),
                 [n, i] { return "cup at " + std::to_string(i) + " on n=" + std::to_string(n); });
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("bubble");
    t.param("max_delta", opt.max_bubble_delta);
    for (const auto& tc : triples_up_to(opt.max_bubble_delta)) {
      const int a = tc.a(), b = tc.b(), c = tc.c();
      for (int d : cg_range(a, b)) {
        auto td = AdmissibleTriple::make(a, b, d);
        if (td.delta() > opt.max_bubble_delta) continue;
        NetworkMap lhs = compose(clebsch_projection(td), clebsch_injection(tc));
        bool ok = c == d ? lhs == symmetrizer(c) * (theta(tc) / delta_dim(c)) : lhs.is_zero();
        t.expect(ok, [&] { return "a,b,c,d=" + triple_str(tc) + "," + std::to_string(d); });
      }
    }
    out.push_back(t.done());
  }
  const int fmax = std::min(opt.max_fusion, cap / 4);
  {
    Tally t("fusion");
    t.param("max_label", fmax);
    for (int a = 0; a <= fmax; ++a) {
      for (int b = 0; b <= fmax; ++b) {
        NetworkMap sum(a + b, a + b), crossed(a + b, a + b);
        for (int c : cg_range(a, b)) {
          Rational w = delta_dim(c) / theta(a, b, c);
          sum += fused_tree(a, b, b, a, c) * w;
          crossed += h_tree(a, b, a, b, c) * (w * sign_pow((a - b + c) / 2));
        }
        NetworkMap parallel = tensor(symmetrizer(a), symmetrizer(b));
        t.expect(sum == parallel, [a, b] { return "parallel a=" + std::to_string(a) + " b=" + std::to_string(b); });
        t.expect(crossed == compose(parallel, block_swap(a, b)),
                 [a, b] { return "crossing a=" + std::to_string(a) + " b=" + std::to_string(b); });
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("sign_kink");
    const int kmax = std::min(nmax, cap / 4);
    t.param("max_n", kmax);
    for (int n = 0; n <= kmax; ++n) {
      NetworkMap lhs = compose(symmetrizer(n), compose(zigzag(n), symmetrizer(n)));
      t.expect(lhs == symmetrizer(n) * Rational(sign_pow(n)), [n] { return "n=" + std::to_string(n); });
    }
    out.push_back(t.done());
  }
  {
    Tally crossed("sign_crossed_vertex"), bent("sign_bent_vertex");
    crossed.param("max_delta", 4);
    bent.param("max_delta", 4);
    for (const auto& tc : triples_up_to(4)) {
      const int a = tc.a(), b = tc.b(), c = tc.c();
      if (a + b + c > cap || a + 3 * b + c > cap) continue;
      auto swapped = AdmissibleTriple::make(b, a, c);
      crossed.expect(compose(clebsch_projection(tc), block_swap(a, b)) ==
                         clebsch_projection(swapped) * Rational(sign_pow(tc.gamma())),
                     [&] { return triple_str(tc); });
      // Up vertex (c,b <- a) with its b leg bent down beside the b input.
      NetworkMap up = tensor(clebsch_injection(AdmissibleTriple::make(c, b, a)), NetworkMap::identity(b));
      bent.expect(act_on_legs(nested_caps(b), c, up) == clebsch_projection(tc) * Rational(sign_pow(tc.alpha())),
                  [&] { return triple_str(tc); });
    }
    out.push_back(crossed.done());
    out.push_back(bent.done());
  }
  return out;
}

std::vector<Check> recurrence_checks(const CheckOptions& opt) {
  std::vector<Check> out;
  const auto triples = triples_up_to(opt.max_delta);
  {
    Tally t("reference_polynomials");
    for (const auto& [tc, text] : reference_rows()) {
      Poly3 want = parse_poly(text);
      Poly3 got = central_function(tc);
      t.expect(got == want, [&] { return label(tc) + ": " + to_string(got) + " vs " + to_string(want); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("oracle_equivalence");
    t.param("max_delta", opt.max_delta).param("samples", opt.samples).param("seed", static_cast<long>(opt.seed));
    UnimodularSampler sampler(opt.seed);
    for (const auto& tc : triples) {
      Poly3 p = central_function(tc);
      for (int i = 0; i < opt.samples; ++i) {
        Mat2 x1 = sampler.next(), x2 = sampler.next();
        Rational lhs = poly_eval(p, x1.trace(), x2.trace(), (x1 * x2.inverse()).trace());
        Rational rhs = central_function_numeric(tc, x1, x2);
        t.expect(lhs == rhs, [&] { return label(tc) + ": " + to_string(lhs) + " vs " + to_string(rhs); });
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("theta_at_identity");
    t.param("max_delta", opt.max_delta);
    for (const auto& tc : triples) {
      Rational v = poly_eval(central_function(tc), 2, 2, 2);
      t.expect(v == theta(tc), [&] { return label(tc) + ": " + to_string(v); });
    }
    out.push_back(t.done());
  }
  {
    Tally monic("monic"), graded("grading");
    monic.param("max_delta", opt.max_delta);
    graded.param("max_delta", opt.max_delta);
    for (const auto& tc : triples) {
      Poly3 p = central_function(tc);
      Exponents lead = leading_monomial(tc);
      bool ok = p.coefficient(lead) == 1;
      for (const auto& [e, c] : p.terms())
        if (e != lead && e.degree() >= lead.degree()) ok = false;
      monic.expect(ok, [&] { return label(tc) + ": " + to_string(p); });
      bool g = std::all_of(p.terms().begin(), p.terms().end(),
                           [&](const auto& term) { return grading(term.first) == grading(tc); });
      graded.expect(g, [&] { return label(tc); });
    }
    out.push_back(monic.done());
    out.push_back(graded.done());
  }
  {
    Tally t("multiply_by_x");
    t.param("max_delta", opt.max_delta);
    for (const auto& tc : triples) {
      Poly3 lhs = Poly3::x() * central_function(tc);
      Poly3 rhs = central_to_poly(multiply_by_x(tc));
      t.expect(lhs == rhs, [&] { return label(tc); });
    }
    out.push_back(t.done());
  }
  return out;
}

std::vector<Check> symmetry_checks(const CheckOptions& opt) {
  std::vector<Check> out;
  for (const auto& tc : triples_up_to(opt.max_delta)) {
    Tally t("symmetry " + label(tc));
    t.param("a", tc.a()).param("b", tc.b()).param("c", tc.c());
    for (const auto& sigma : all_perm3()) {
      auto target = permute(sigma, tc);
      t.expect(apply_symmetry(sigma, tc) == central_function(target),
               [&] { return label(tc) + " -> " + label(target); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("permuted_polynomials");
    Poly3 base = central_function(1, 2, 3);
    const std::pair<Perm3, const char*> rows[] = {
        {{0, 1, 2}, "xy^2-2/3(yz+x)"}, {{2, 1, 0}, "xz^2-2/3(yz+x)"}, {{1, 2, 0}, "yz^2-2/3(xz+y)"},
        {{0, 2, 1}, "y^2z-2/3(xy+z)"}, {{2, 0, 1}, "x^2z-2/3(xy+z)"}, {{1, 0, 2}, "x^2y-2/3(xz+y)"},
    };
    for (const auto& [sigma, text] : rows) {
      auto target = permute(sigma, AdmissibleTriple::make(1, 2, 3));
      Poly3 want = parse_poly(text);
      t.expect(central_function(target) == want && substitute_slots(sigma, base) == want,
               [&] { return label(target); });
    }
    out.push_back(t.done());
  }
  return out;
}

std::vector<Check> product_checks(const CheckOptions& opt) {
  std::vector<Check> out;
  const auto triples = triples_up_to(opt.max_delta);
  {
    Tally cross("product_cross_path"), sym("product_commutes"), filter("product_support"), graded("product_grading");
    for (auto* t : {&cross, &sym, &filter, &graded}) t->param("max_delta", opt.max_delta);
    for (const auto& t1 : triples) {
      for (const auto& t2 : triples) {
        CentralExpansion p = product_central(t1, t2);
        cross.expect(p == product_via_polynomials(t1, t2),
                     [&] { return label(t1) + "*" + label(t2) + ": " + to_string(p); });
        if (t1 <= t2) sym.expect(p == product_central(t2, t1), [&] { return label(t1) + "*" + label(t2); });
        for (const auto& [k, c] : p.terms()) {
          bool ok = is_admissible(t1.a(), t2.a(), k.a()) && is_admissible(t1.b(), t2.b(), k.b()) &&
                    is_admissible(t1.c(), t2.c(), k.c());
          bool some_j = false;
          for (int j : cg_range(t2.a(), t1.b()))
            some_j = some_j || (is_admissible(t1.c(), j, k.a()) && is_admissible(t2.c(), j, k.b()));
          filter.expect(ok && some_j, [&] { return label(t1) + "*" + label(t2) + " -> " + label(k); });
          Grading g{(t1.a() + t2.a()) % 2, (t1.b() + t2.b()) % 2};
          graded.expect(grading(k) == g, [&] { return label(t1) + "*" + label(t2) + " -> " + label(k); });
        }
      }
    }
    for (auto* t : {&cross, &sym, &filter, &graded}) out.push_back(t->done());
  }
  {
    Tally t("reference_products");
    auto x = AdmissibleTriple::make(1, 0, 1), y = AdmissibleTriple::make(0, 1, 1);
    CentralExpansion xx = product_central(x, x), xy = product_central(x, y);
    t.expect(to_string(xx) == "χ202 + χ000", [&] { return to_string(xx); });
    t.expect(to_string(xy) == "χ112 + 1/2 χ110", [&] { return to_string(xy); });
    out.push_back(t.done());
  }
  const int deg = opt.max_delta + 2;
  {
    Tally closed("monomial_expansion"), back("monomial_round_trip");
    closed.param("max_degree", deg);
    back.param("max_degree", deg);
    for (int d = 0; d <= deg; ++d) {
      for (int ex = 0; ex <= d; ++ex) {
        for (int ey = 0; ex + ey <= d; ++ey) {
          const int ez = d - ex - ey;
          Poly3 m = Poly3::monomial({ex, ey, ez});
          CentralExpansion e = monomial_to_central(ex, ey, ez);
          auto where = [&] { return "x^" + std::to_string(ex) + " y^" + std::to_string(ey) + " z^" + std::to_string(ez); };
          closed.expect(e == poly_to_central_by_elimination(m), where);
          back.expect(central_to_poly(e) == m, where);
        }
      }
    }
    out.push_back(closed.done());
    out.push_back(back.done());
  }
  {
    Tally t("central_round_trip");
    t.param("max_delta", opt.max_delta + 1);
    for (const auto& tc : triples_up_to(opt.max_delta + 1)) {
      t.expect(poly_to_central(central_function(tc)) == CentralExpansion::single(tc), [&] { return label(tc); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("fricke_slice");
    UnimodularSampler sampler(opt.seed);
    for (int i = 0; i < opt.samples; ++i) {
      Rational tx = sampler.next_rational(), ty = sampler.next_rational(), zeta = sampler.next_rational();
      if (is_zero(zeta)) zeta = 1;
      auto [e, h] = fricke_slice(tx, ty, zeta);
      bool ok = e.is_unimodular() && h.is_unimodular() && e.trace() == tx && h.trace() == ty &&
                (e * h.inverse()).trace() == zeta + 1 / zeta;
      t.expect(ok, [&] { return "tau_x=" + to_string(tx) + " tau_y=" + to_string(ty) + " zeta=" + to_string(zeta); });
    }
    auto [e, h] = fricke_slice(2, 2, 1);
    for (const auto& tc : triples_up_to(std::min(opt.max_delta, 3)))
      t.expect(central_function_numeric(tc, e, h) == theta(tc), [&] { return "theta at " + label(tc); });
    out.push_back(t.done());
  }
  return out;
}

std::vector<Check> recoupling_checks(const CheckOptions& opt) {
  std::vector<Check> out;
  const int n = opt.max_recoupling;
  {
    Tally closed("sixj_closed_forms"), magnitudes("sixj_closed_form_magnitudes");
    closed.param("max_label", n);
    magnitudes.param("max_label", n);
    for (int a = 0; a <= n; ++a) {
      for (int c = 0; c <= n; ++c) {
        for (int b = 0; b <= a + c + 2; ++b) {
          for (int cs : {1, -1}) {
            for (int as : {1, -1}) {
              SixJKey k{1, a, b, c + cs, c, a + as};
              if (!is_valid(k)) continue;
              Rational g = sixj_general(k);
              Rational s = sixj_special(a, b, c, cs, as);
              closed.expect(g == s, [&] { return to_string(k) + ": " + to_string(g) + " vs " + to_string(s); });
              Rational p = sixj_special(a, b, c, cs, as, SignConvention::alternating);
              magnitudes.expect(abs(g) == abs(p), [&] { return to_string(k); });
            }
          }
        }
      }
    }
    out.push_back(closed.done());
    out.push_back(magnitudes.done());
  }
  {
    Tally t("h_tree_two_term_expansion");
    t.param("max_label", n);
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        for (int c = 0; c <= n; ++c) {
          for (int es : {-1, 1}) {
            const int e = c + es;
            if (e < 0 || !is_admissible(1, e, c) || !is_admissible(e, b, a)) continue;
            NetworkMap h = h_tree(1, a, b, c, e);
            NetworkMap sum(h.inputs(), h.outputs());
            for (const auto& term : recoupling_1abc(es, a, b, c)) sum += fused_tree(1, a, b, c, term.target) * term.coefficient;
            t.expect(h == sum, [&] { return "a,b,c=" + triple_str(a, b, c) + " e=" + std::to_string(e); });
          }
        }
      }
    }
    out.push_back(t.done());
  }
  {
    Tally prime("sixj_prime_relation"), dense("sixj_dense_agreement"), complete("h_tree_completeness");
    const int m = std::min(n, 3);
    for (auto* t : {&prime, &dense, &complete}) t->param("max_label", m);
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b)
        for (int c = 0; c <= m; ++c)
          for (int d = 0; d <= m; ++d)
            for (int e = 0; e <= m; ++e) {
              bool any = false;
              for (int f = 0; f <= m; ++f) {
                SixJKey k{a, b, c, d, e, f};
                if (!is_valid(k)) continue;
                any = true;
                Rational g = sixj_general(k);
                prime.expect(sixj_prime(k) == g * Rational(sign_pow((b + d - e - f) / 2)), [&] { return to_string(k); });
                if (a + b + c + d <= 8) dense.expect(sixj_general_dense(k) == g, [&] { return to_string(k); });
              }
              // The H-tree uses (a,e,d) and (e,c,b).
              if (!any || !is_admissible(a, e, d) || !is_admissible(e, c, b) || a + b + c + d > 14) continue;
              NetworkMap h = h_tree(a, b, c, d, e);
              NetworkMap sum(h.inputs(), h.outputs());
              for (int f : cg_range(a, b)) {
                if (!is_admissible(d, c, f)) continue;
                sum += fused_tree(a, b, c, d, f) * sixj_prime({a, b, c, d, e, f});
              }
              complete.expect(h == sum, [&] { return "H-tree " + std::to_string(a) + std::to_string(b) + std::to_string(c) +
                                                     std::to_string(d) + " e=" + std::to_string(e); });
            }
    for (auto* t : {&prime, &dense, &complete}) out.push_back(t->done());
  }
  return out;
}

std::vector<Check> rank_one_checks(const CheckOptions& opt) {
  std::vector<Check> out;
  {
    Tally t("rank1_products");
    t.param("max_label", 6);
    for (int a = 0; a <= 6; ++a) {
      for (int b = 0; b <= 6; ++b) {
        Poly3 sum;
        for (int c : rank1_product_range(a, b)) sum += chi_rank1(c);
        t.expect(chi_rank1(a) * chi_rank1(b) == sum, [a, b] { return std::to_string(a) + "," + std::to_string(b); });
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("rank1_eigenvalues");
    t.param("max_n", 10).param("seed", static_cast<long>(opt.seed));
    UnimodularSampler sampler(opt.seed);
    for (int i = 0; i < 10; ++i) {
      Rational lam = sampler.next_rational();
      while (is_zero(lam) || abs(lam) == 1) lam = sampler.next_rational();
      for (int k = 0; k <= 10; ++k) {
        Rational v = poly_eval(chi_rank1(k), lam + 1 / lam, 0, 0);
        t.expect(v == chi_rank1_eigen(k, lam), [&] { return "n=" + std::to_string(k) + " lambda=" + to_string(lam); });
      }
    }
    out.push_back(t.done());
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"diagrams", "recurrence", "symmetry", "products", "recoupling", "rank1", "all"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const CheckOptions& opt) {
  using Fn = std::vector<Check> (*)(const CheckOptions&);
  const std::pair<const char*, Fn> table[] = {
      {"diagrams", diagram_checks}, {"recurrence", recurrence_checks}, {"symmetry", symmetry_checks},
      {"products", product_checks}, {"recoupling", recoupling_checks}, {"rank1", rank_one_checks},
  };
  std::vector<Check> out;
  bool known = false;
  for (const auto& [name, fn] : table) {
    if (suite != "all" && suite != name) continue;
    known = true;
    auto part = fn(opt);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (!known) throw DomainError("unknown suite: " + suite);
  return out;
}

bool all_pass(const std::vector<Check>& checks) noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

}  // namespace spinnet
