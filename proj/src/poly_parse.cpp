#include "spinnet/poly_parse.hpp"

#include "spinnet/errors.hpp"

#include <cctype>
#include <string>

namespace spinnet {

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly3 parse() {
    Poly3 p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                      std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_primary() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == '(';
  }

  Poly3 expr() {
    Poly3 acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      bool minus = s_[pos_++] == '-';
      Poly3 t = term();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  Poly3 term() {
    Poly3 acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        Poly3 d = factor();
        if (d.is_zero()) fail("division by zero");
        if (d.size() != 1 || d.terms().begin()->first != Exponents{}) fail("division by a non-constant");
        acc *= Rational(1) / d.terms().begin()->second;
      } else if (starts_primary()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly3 factor() {
    Poly3 base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Poly3 primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly3 inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      return c == 'x' ? Poly3::x() : c == 'y' ? Poly3::y() : Poly3::z();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly3::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }
};

}  // namespace

Poly3 parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace spinnet
