// Acceptance runner. `acceptance N` checks criterion N; without arguments all
// ten run. Each prints one PASS/FAIL line; the exit code is nonzero on FAIL.
#include "spinnet/central_functions.hpp"
#include "spinnet/checks.hpp"
#include "spinnet/combinatorics.hpp"
#include "spinnet/diagrams.hpp"
#include "spinnet/errors.hpp"
#include "spinnet/mat2.hpp"
#include "spinnet/poly_parse.hpp"
#include "spinnet/products.hpp"
#include "spinnet/recoupling.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

using namespace spinnet;

namespace {

struct Outcome {
  bool pass = true;
  long cases = 0;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) note = "first failure: " + what;
    pass = pass && ok;
  }
};

AdmissibleTriple T(int a, int b, int c) { return AdmissibleTriple::make(a, b, c); }

Integer fact(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational theta_oracle(const AdmissibleTriple& t) {
  Rational r(fact(t.alpha()) * fact(t.beta()) * fact(t.gamma()) * fact(t.delta() + 1), fact(t.a()) * fact(t.b()) * fact(t.c()));
  r.canonicalize();
  return r;
}

// LaTeX table cell to plain polynomial text: \tfrac23 and \frac12 become 2/3, 1/2.
std::string from_latex(std::string s) {
  s = std::regex_replace(s, std::regex(R"(\\t?frac\{?(\d+)\}?\{?(\d+)\}?)"), "$1/$2 ");
  return s;
}

Outcome reference_polynomials() {
  const std::pair<AdmissibleTriple, const char*> rows[] = {
      {T(0, 0, 0), "1"},
      {T(1, 0, 1), "x"},
      {T(2, 0, 2), "x^2-1"},
      {T(1, 1, 2), "xy-\\frac12 z"},
      {T(3, 0, 3), "x^3-2x"},
      {T(2, 1, 3), "x^2y-\\tfrac23(xz+y)"},
      {T(2, 2, 2), "xyz-\\frac12(x^2+y^2+z^2)+1"},
      {T(4, 0, 4), "x^4-3x^2+1"},
      {T(3, 1, 4), "x^3y-\\tfrac34x^2z-\\frac12(3xy-z)"},
      {T(2, 2, 4), "x^2y^2-xyz+\\tfrac16z^2-\\frac12(x^2+y^2)+\\tfrac13"},
      {T(3, 2, 3), "x^2yz-\\tfrac23(xz^2+xy^2)-\\frac12 x^3-\\tfrac19(2yz-13x)"},
  };
  Outcome o;
  for (const auto& [t, cell] : rows) {
    std::string want = to_string(parse_poly(from_latex(cell)));
    std::string got = to_string(central_function(t));
    o.expect(got == want, label(t) + ": " + got + " vs " + want);
  }
  return o;
}

Outcome permuted_polynomials() {
  const std::pair<AdmissibleTriple, const char*> rows[] = {
      {T(1, 2, 3), "xy^2-\\tfrac23(yz+x)"}, {T(3, 2, 1), "xz^2-\\tfrac23(yz+x)"}, {T(2, 3, 1), "yz^2-\\tfrac23(xz+y)"},
      {T(1, 3, 2), "y^2z-\\tfrac23(xy+z)"}, {T(3, 1, 2), "x^2z-\\tfrac23(xy+z)"}, {T(2, 1, 3), "x^2y-\\tfrac23(xz+y)"},
  };
  Outcome o;
  for (const auto& [t, cell] : rows) {
    std::string want = to_string(parse_poly(from_latex(cell)));
    o.expect(to_string(central_function(t)) == want, label(t) + " direct");
    bool reached = false;
    for (const auto& s : all_perm3())
      if (permute(s, T(1, 2, 3)) == t) reached = to_string(apply_symmetry(s, T(1, 2, 3))) == want;
    o.expect(reached, label(t) + " from 123");
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  UnimodularSampler sampler(20240601);
  for (const auto& t : triples_up_to(5)) {
    Poly3 p = central_function(t);
    for (int i = 0; i < 20; ++i) {
      Mat2 x1 = sampler.next(), x2 = sampler.next();
      Rational lhs = poly_eval(p, x1.trace(), x2.trace(), (x1 * x2.inverse()).trace());
      o.expect(lhs == central_function_numeric(t, x1, x2), label(t));
    }
  }
  return o;
}

Outcome theta_specialization() {
  Outcome o;
  for (const auto& t : triples_up_to(6)) o.expect(poly_eval(central_function(t), 2, 2, 2) == theta_oracle(t), label(t));
  return o;
}

Outcome diagram_suite() {
  Outcome o;
  std::string names;
  for (const auto& c : diagram_checks(CheckOptions{})) {
    if (!c.pass && o.pass) o.note = c.name + ": " + c.details;
    o.pass = o.pass && c.pass;
    o.cases += c.cases;
    names += (names.empty() ? "" : ",") + c.name;
  }
  if (o.pass) o.note = names;
  return o;
}

NetworkMap two_term(int es, int a, int b, int c, SignConvention conv) {
  NetworkMap h = h_tree(1, a, b, c, c + es);
  NetworkMap sum(h.inputs(), h.outputs());
  for (const auto& t : recoupling_1abc(es, a, b, c, conv)) sum += fused_tree(1, a, b, c, t.target) * t.coefficient;
  return sum;
}

Outcome recoupling() {
  Outcome signs;
  long lemma = 0, lemma_ok = 0, lemma_fixed = 0, cor = 0, cor_ok = 0, cor_fixed = 0, cor_abs = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int es : {-1, 1}) {
          int e = c + es;
          if (e < 0 || !is_admissible(1, e, c) || !is_admissible(e, b, a)) continue;
          NetworkMap h = h_tree(1, a, b, c, e);
          bool ok = h == two_term(es, a, b, c, SignConvention::alternating);
          ++lemma;
          lemma_ok += ok;
          lemma_fixed += h == two_term(es, a, b, c, SignConvention::uniform);
          std::ostringstream w;
          w << "two-term expansion at a,b,c=" << a << "," << b << "," << c << " e=" << e;
          signs.expect(ok, w.str());
        }
  for (int a = 0; a <= 4; ++a)
    for (int c = 0; c <= 4; ++c)
      for (int b = 0; b <= a + c + 2; ++b)
        for (int cs : {1, -1})
          for (int as : {1, -1}) {
            SixJKey k{1, a, b, c + cs, c, a + as};
            if (!is_valid(k)) continue;
            Rational g = sixj_general(k);
            Rational p = sixj_special(a, b, c, cs, as, SignConvention::alternating);
            ++cor;
            cor_ok += p == g;
            cor_abs += abs(p) == abs(g);
            cor_fixed += sixj_special(a, b, c, cs, as) == g;
            signs.expect(p == g, "closed form " + to_string(k) + " = " + to_string(p) + ", contraction " + to_string(g));
          }
  std::ostringstream n;
  n << "sign (-1)^i: two-term " << lemma_ok << "/" << lemma << ", closed forms " << cor_ok << "/" << cor
    << "; magnitudes " << cor_abs << "/" << cor << "; sign -1 in place of (-1)^i: two-term " << lemma_fixed << "/" << lemma
    << ", closed forms " << cor_fixed << "/" << cor;
  if (!signs.pass) n << "; " << signs.note;
  signs.note = n.str();
  return signs;
}

Outcome products() {
  Outcome o;
  auto ts = triples_up_to(3);
  for (const auto& s : ts)
    for (const auto& t : ts)
      o.expect(product_central(s, t) == product_via_polynomials(s, t), label(s) + "*" + label(t));
  o.expect(to_string(product_central(T(1, 0, 1), T(1, 0, 1))) == "χ202 + χ000", "x^2");
  o.expect(to_string(product_central(T(1, 0, 1), T(0, 1, 1))) == "χ112 + 1/2 χ110", "xy");
  return o;
}

Outcome rank_one() {
  Outcome o;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      Poly3 sum;
      for (int c = a + b; c >= std::abs(a - b); c -= 2) sum += chi_rank1(c);
      o.expect(chi_rank1(a) * chi_rank1(b) == sum, std::to_string(a) + "*" + std::to_string(b));
    }
  UnimodularSampler sampler(99);
  for (int i = 0; i < 10; ++i) {
    Rational lam = sampler.next_rational();
    while (is_zero(lam) || abs(lam) == 1) lam = sampler.next_rational();
    for (int n = 0; n <= 10; ++n) {
      // Quantum integer [n+1] = (lam^(n+1) - lam^-(n+1)) / (lam - lam^-1).
      Rational up = 1, inv = 1 / lam;
      for (int k = 0; k <= n; ++k) up *= lam;
      Rational down = 1;
      for (int k = 0; k <= n; ++k) down *= inv;
      Rational q = (up - down) / (lam - inv);
      o.expect(poly_eval(chi_rank1(n), lam + inv, 0, 0) == q, "n=" + std::to_string(n) + " lambda=" + to_string(lam));
    }
  }
  return o;
}

Outcome structure() {
  Outcome o;
  for (const auto& t : triples_up_to(6)) {
    Poly3 p = central_function(t);
    Exponents lead{t.beta(), t.alpha(), t.gamma()};
    bool monic = p.coefficient(lead) == 1;
    for (const auto& [e, c] : p.terms())
      if (e.degree() >= t.delta() && !(e == lead)) monic = false;
    o.expect(monic, label(t) + " monic");
    bool graded = true;
    for (const auto& [e, c] : p.terms())
      graded = graded && (e.x + e.z) % 2 == t.a() % 2 && (e.y + e.z) % 2 == t.b() % 2;
    o.expect(graded, label(t) + " grading");
  }
  return o;
}

Outcome basis_round_trips() {
  Outcome o;
  for (int d = 0; d <= 5; ++d)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) {
        Poly3 m = Poly3::monomial({i, j, d - i - j});
        o.expect(central_to_poly(monomial_to_central(i, j, d - i - j)) == m, to_string(m));
        o.expect(central_to_poly(poly_to_central(m)) == m, to_string(m));
      }
  for (const auto& t : triples_up_to(4)) {
    CentralExpansion e = CentralExpansion::single(t);
    o.expect(poly_to_central(central_to_poly(e)) == e, label(t));
  }
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const Criterion criteria[] = {
    {"reference rank-two polynomials", reference_polynomials},
    {"permuted rank-two polynomials", permuted_polynomials},
    {"polynomials match tensor contraction, degree <= 5", oracle_equivalence},
    {"value at the identity is Theta, degree <= 6", theta_specialization},
    {"diagram identities", diagram_suite},
    {"recoupling expansions with sign (-1)^i", recoupling},
    {"product structure constants", products},
    {"rank-one products and eigenvalue form", rank_one},
    {"monic leading term and grading, degree <= 6", structure},
    {"monomial and central basis round trips", basis_round_trips},
};

bool report(int n) {
  const auto& c = criteria[n - 1];
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.title << " (" << o.cases
            << " cases, " << std::fixed;
  std::cout.precision(1);
  std::cout << secs << "s)";
  if (!o.note.empty()) std::cout << " [" << o.note << "]";
  std::cout << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    int n = std::atoi(argv[i]);
    if (n < 1 || n > 10) {
      std::cerr << "usage: acceptance [1-10 ...]\n";
      return 2;
    }
    which.push_back(n);
  }
  if (which.empty())
    for (int n = 1; n <= 10; ++n) which.push_back(n);
  bool all = true;
  for (int n : which) all = report(n) && all;
  return all ? 0 : 1;
}
