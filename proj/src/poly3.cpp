#include "spinnet/poly3.hpp"

#include "spinnet/errors.hpp"

#include <algorithm>
#include <vector>

namespace spinnet {

Poly3::Poly3(std::initializer_list<std::pair<const Exponents, Rational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Poly3 Poly3::constant(const Rational& c) { return monomial({}, c); }

Poly3 Poly3::monomial(Exponents e, const Rational& c) {
  Poly3 p;
  p.add_term(e, c);
  return p;
}

Rational Poly3::coefficient(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly3::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

void Poly3::add_term(Exponents e, const Rational& c) {
  if (e.x < 0 || e.y < 0 || e.z < 0) throw DomainError("negative exponent in polynomial term");
  if (spinnet::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (spinnet::is_zero(it->second)) terms_.erase(it);
  }
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& c) {
  if (spinnet::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea.x + eb.x, ea.y + eb.y, ea.z + eb.z}, ca * cb);
    }
  }
  return r;
}

Poly3 Poly3::pow(int n) const {
  if (n < 0) throw DomainError("negative polynomial power");
  Poly3 r = constant(1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

namespace {

std::vector<Rational> powers(const Rational& v, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1;
  for (int i = 1; i <= n; ++i) out[i] = out[i - 1] * v;
  return out;
}

}  // namespace

Rational poly_eval(const Poly3& p, const Rational& x, const Rational& y, const Rational& z) {
  int mx = 0, my = 0, mz = 0;
  for (const auto& [e, c] : p.terms()) {
    mx = std::max(mx, e.x);
    my = std::max(my, e.y);
    mz = std::max(mz, e.z);
  }
  auto px = powers(x, mx), py = powers(y, my), pz = powers(z, mz);
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * px[e.x] * py[e.y] * pz[e.z];
  return sum;
}

std::string to_string(const Poly3& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    if (l.first.degree() != r.first.degree()) return l.first.degree() > r.first.degree();
    return l.first > r.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto var = [&mono](char v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    var('x', e.x);
    var('y', e.y);
    var('z', e.z);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace spinnet
