#pragma once

#include "spinnet/combinatorics.hpp"
#include "spinnet/network_map.hpp"
#include "spinnet/rational.hpp"

#include <vector>

namespace spinnet {

/// Linear map V_{l1} (x) ... (x) V_{lm} -> V_{k1} (x) ... (x) V_{kn} between
/// tensor products of symmetric powers, in the bases u_j = sym(e1^{l-j} e2^j).
///
/// This is the image of a symmetrizer-bounded network under restriction, and
/// is far smaller than the 2^k form once labels grow.
class IrrepMap {
public:
  IrrepMap(std::vector<int> in_labels, std::vector<int> out_labels);
  static IrrepMap identity(const std::vector<int>& labels);
  static IrrepMap scalar(const Rational& v);

  const std::vector<int>& in_labels() const noexcept { return in_; }
  const std::vector<int>& out_labels() const noexcept { return out_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return m_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return m_[r * cols_ + c]; }
  const Rational& value() const;
  bool is_zero() const;

  IrrepMap& operator+=(const IrrepMap& o);
  IrrepMap& operator*=(const Rational& c);
  friend IrrepMap operator*(IrrepMap a, const Rational& c) { return a *= c; }
  friend bool operator==(const IrrepMap&, const IrrepMap&) = default;

private:
  std::vector<int> in_, out_;
  std::size_t rows_, cols_;
  std::vector<Rational> m_;
};

IrrepMap compose(const IrrepMap& f, const IrrepMap& g);
IrrepMap tensor(const IrrepMap& f, const IrrepMap& g);
/// (id (x) f (x) id) o g where f acts on output factors [offset, offset + |f.in|).
IrrepMap act_on_factors(const IrrepMap& f, int offset, const IrrepMap& g);
/// g o (id (x) f (x) id) where f feeds input factors [offset, offset + |f.out|).
IrrepMap precompose_on_factors(const IrrepMap& g, int offset, const IrrepMap& f);
Rational trace(const IrrepMap& f);

/// Vertex V_c -> V_a (x) V_b from the closed-form coefficients.
IrrepMap cg_injection(const AdmissibleTriple& t);
/// Vertex V_a (x) V_b -> V_c, the reflection of cg_injection.
IrrepMap cg_projection(const AdmissibleTriple& t);

/// Restricts a dense map whose ends are symmetrized in blocks of the given
/// labels to the reduced bases.
IrrepMap to_irrep_basis(const NetworkMap& f, const std::vector<int>& in_labels, const std::vector<int>& out_labels);

}  // namespace spinnet
