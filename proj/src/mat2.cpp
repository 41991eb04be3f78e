#include "spinnet/mat2.hpp"

#include "spinnet/errors.hpp"

namespace spinnet {

Mat2::Mat2(Rational a, Rational b, Rational c, Rational d)
    : m_{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}} {
  det_ = m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0];
}

Mat2 Mat2::inverse() const {
  if (sgn(det_) == 0) throw DomainError("matrix is singular");
  return Mat2(m_[1][1] / det_, -m_[0][1] / det_, -m_[1][0] / det_, m_[0][0] / det_);
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return Mat2(l(0, 0) * r(0, 0) + l(0, 1) * r(1, 0), l(0, 0) * r(0, 1) + l(0, 1) * r(1, 1),
              l(1, 0) * r(0, 0) + l(1, 1) * r(1, 0), l(1, 0) * r(0, 1) + l(1, 1) * r(1, 1));
}

Mat2 elementary(const Rational& t) { return Mat2(t, 1, -1, 0); }

Rational UnimodularSampler::next_rational() {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  Rational q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

Mat2 UnimodularSampler::next() {
  std::uniform_int_distribution<int> factors(2, 3);
  Mat2 m = Mat2::identity();
  for (int i = factors(rng_); i > 0; --i) m = m * elementary(next_rational());
  return m;
}

}  // namespace spinnet
