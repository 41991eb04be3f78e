#include "spinnet/central_expansion.hpp"

#include <algorithm>

namespace spinnet {

CentralExpansion CentralExpansion::single(const AdmissibleTriple& t, const Rational& c) {
  CentralExpansion e;
  e.add(t, c);
  return e;
}

Rational CentralExpansion::coefficient(const AdmissibleTriple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CentralExpansion::add(const AdmissibleTriple& t, const Rational& c) {
  if (spinnet::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (spinnet::is_zero(it->second)) terms_.erase(it);
  }
}

void CentralExpansion::add(int a, int b, int c, const Rational& coeff) {
  add(AdmissibleTriple::make(a, b, c), coeff);
}

CentralExpansion& CentralExpansion::operator+=(const CentralExpansion& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

CentralExpansion& CentralExpansion::operator*=(const Rational& c) {
  if (spinnet::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& [t, v] : terms_) v *= c;
  }
  return *this;
}

std::vector<std::pair<AdmissibleTriple, Rational>> CentralExpansion::display_order() const {
  std::vector<std::pair<AdmissibleTriple, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.first.delta() != r.first.delta()) return l.first.delta() > r.first.delta();
    return l.first > r.first;
  });
  return out;
}

std::string to_string(const CentralExpansion& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e.display_order()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + " ";
    out += "χ" + label(t);
  }
  return out;
}

}  // namespace spinnet
