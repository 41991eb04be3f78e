#pragma once

#include "spinnet/rational.hpp"

#include <cstdint>
#include <random>

namespace spinnet {

/// 2x2 rational matrix with its determinant cached at construction.
class Mat2 {
public:
  Mat2(Rational a, Rational b, Rational c, Rational d);
  static Mat2 identity() { return Mat2(1, 0, 0, 1); }

  const Rational& operator()(int r, int c) const { return m_[r][c]; }
  const Rational& det() const noexcept { return det_; }
  Rational trace() const { return m_[0][0] + m_[1][1]; }
  bool is_unimodular() const { return det_ == 1; }

  Mat2 inverse() const;  // throws DomainError when singular
  friend Mat2 operator*(const Mat2& l, const Mat2& r);
  friend bool operator==(const Mat2& l, const Mat2& r) { return l.m_[0][0] == r.m_[0][0] && l.m_[0][1] == r.m_[0][1] && l.m_[1][0] == r.m_[1][0] && l.m_[1][1] == r.m_[1][1]; }

private:
  Rational m_[2][2];
  Rational det_;
};

/// [[t, 1], [-1, 0]]: unimodular for every t.
Mat2 elementary(const Rational& t);

/// Draws unimodular matrices as products of a few elementary factors with
/// small random rational parameters. Deterministic for a given seed.
class UnimodularSampler {
public:
  explicit UnimodularSampler(std::uint64_t seed) : rng_(seed) {}
  Mat2 next();
  Rational next_rational();

private:
  std::mt19937_64 rng_;
};

}  // namespace spinnet
