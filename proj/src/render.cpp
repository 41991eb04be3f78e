#include "spinnet/render.hpp"

#include "spinnet/errors.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace spinnet {

namespace {


std::string latex_monomial(const Exponents& e) {
  std::string m;
  auto var = [&m](char v, int k) {
    if (k == 0) return;
    m += v;
    if (k > 1) m += k < 10 ? "^" + std::to_string(k) : "^{" + std::to_string(k) + "}";
  };
  var('x', e.x);
  var('y', e.y);
  var('z', e.z);
  return m;
}

// Shared sign-and-magnitude layout for both polynomial and expansion terms.
template <class Terms, class Body>
std::string latex_sum(const Terms& terms, Body body) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    out += body(key, mag);
  }
  return out;
}

}  // namespace

std::string latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = sgn(q) < 0 ? "-" : "";
  std::string num = Integer(abs(q.get_num())).get_str(), den = q.get_den().get_str();
  // \tfrac12 style only when both parts are single digits.
  if (num.size() == 1 && den.size() == 1) return sign + "\\tfrac" + num + den;
  return sign + "\\tfrac{" + num + "}{" + den + "}";
}

std::string latex(const Poly3& p) {
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    if (l.first.degree() != r.first.degree()) return l.first.degree() > r.first.degree();
    return l.first > r.first;
  });
  return latex_sum(terms, [](const Exponents& e, const Rational& mag) {
    std::string m = latex_monomial(e);
    if (m.empty()) return latex(mag);
    return mag == 1 ? m : latex(mag) + " " + m;
  });
}

std::string latex(const CentralExpansion& e) {
  return latex_sum(e.display_order(), [](const AdmissibleTriple& t, const Rational& mag) {
    const std::string sep = t.a() > 9 || t.b() > 9 || t.c() > 9 ? "," : "";
    std::string chi = "\\chi_{" + std::to_string(t.a()) + sep + std::to_string(t.b()) + sep + std::to_string(t.c()) + "}";
    return mag == 1 ? chi : latex(mag) + " " + chi;
  });
}

nlohmann::json to_json(const Poly3& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"x", it->first.x}, {"y", it->first.y}, {"z", it->first.z}, {"coefficient", to_string(it->second)}});
  }
  return {{"text", to_string(p)}, {"terms", terms}};
}

nlohmann::json to_json(const CentralExpansion& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, c] : e.display_order()) {
    terms.push_back({{"triple", {t.a(), t.b(), t.c()}}, {"coefficient", to_string(c)}});
  }
  return {{"text", to_string(e)}, {"terms", terms}};
}

nlohmann::json to_json(const Check& c) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : c.params) params[k] = std::stol(v);
  return {{"check", c.name}, {"parameters", params}, {"status", c.pass ? "pass" : "fail"},
          {"cases", c.cases}, {"details", c.details}};
}

Poly3 poly_from_json(const nlohmann::json& j) {
  Poly3 p;
  for (const auto& t : j.at("terms")) {
    p.add_term({t.at("x").get<int>(), t.at("y").get<int>(), t.at("z").get<int>()},
               parse_rational(t.at("coefficient").get<std::string>()));
  }
  return p;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

AdmissibleTriple parse_triple(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::vector<int> v;
  if (s.find(',') == std::string::npos) {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw DomainError("malformed triple: '" + std::string(text) + "'");
      v.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t comma = s.find(',', start);
      std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (part.empty() || !std::all_of(part.begin(), part.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
          part.size() > 6) {
        throw DomainError("malformed triple: '" + std::string(text) + "'");
      }
      v.push_back(std::stoi(part));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (v.size() != 3) throw DomainError("a triple needs three labels: '" + std::string(text) + "'");
  return AdmissibleTriple::make(v[0], v[1], v[2]);
}

}  // namespace spinnet
