#pragma once

#include "spinnet/rational.hpp"

#include <cstddef>
#include <vector>

namespace spinnet {

/// Upper bound on inputs + outputs of any NetworkMap (default 16).
int strand_cap() noexcept;
void set_strand_cap(int cap);

/// Linear map V^{(x)inputs} -> V^{(x)outputs}, V = Q^2, stored densely.
///
/// Basis words are indexed with leg 0 as the most significant bit; bit 0
/// stands for e1 and bit 1 for e2.
class NetworkMap {
public:
  /// Zero map. Throws ResourceError when inputs + outputs exceeds strand_cap().
  NetworkMap(int inputs, int outputs);
  static NetworkMap identity(int strands);
  static NetworkMap scalar(const Rational& v);

  int inputs() const noexcept { return inputs_; }
  int outputs() const noexcept { return outputs_; }
  std::size_t rows() const noexcept { return std::size_t{1} << outputs_; }
  std::size_t cols() const noexcept { return std::size_t{1} << inputs_; }

  const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * cols() + col]; }

  /// Value of a closed network (no inputs, no outputs).
  const Rational& value() const;
  bool is_zero() const;
  NetworkMap transposed() const;

  NetworkMap& operator+=(const NetworkMap& o);
  NetworkMap& operator-=(const NetworkMap& o);
  NetworkMap& operator*=(const Rational& c);
  friend NetworkMap operator+(NetworkMap a, const NetworkMap& b) { return a += b; }
  friend NetworkMap operator-(NetworkMap a, const NetworkMap& b) { return a -= b; }
  friend NetworkMap operator*(NetworkMap a, const Rational& c) { return a *= c; }
  friend NetworkMap operator*(const Rational& c, NetworkMap a) { return a *= c; }
  friend bool operator==(const NetworkMap&, const NetworkMap&) = default;

private:
  int inputs_;
  int outputs_;
  std::vector<Rational> entries_;
};

/// f o g.
NetworkMap compose(const NetworkMap& f, const NetworkMap& g);
/// f (x) g, f on the leading legs.
NetworkMap tensor(const NetworkMap& f, const NetworkMap& g);
/// (id^offset (x) f (x) id^rest) o g, without materialising the padded f.
NetworkMap act_on_legs(const NetworkMap& f, int offset, const NetworkMap& g);
/// g o (id^offset (x) f (x) id^rest).
NetworkMap precompose_on_legs(const NetworkMap& g, int offset, const NetworkMap& f);
/// Scalar of a closed network.
Rational contract_closed(const NetworkMap& f);

}  // namespace spinnet
