#include "spinnet/irrep_map.hpp"

#include "spinnet/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace spinnet {

namespace {

std::size_t dimension(const std::vector<int>& labels) {
  std::size_t d = 1;
  for (int l : labels) {
    if (l < 0) throw DomainError("negative irreducible label");
    d *= static_cast<std::size_t>(l) + 1;
  }
  return d;
}

std::size_t dimension(const std::vector<int>& labels, std::size_t from, std::size_t to) {
  std::size_t d = 1;
  for (std::size_t i = from; i < to; ++i) d *= static_cast<std::size_t>(labels[i]) + 1;
  return d;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

std::vector<int> splice(const std::vector<int>& base, std::size_t offset, std::size_t len,
                        const std::vector<int>& insert) {
  std::vector<int> out(base.begin(), base.begin() + offset);
  out.insert(out.end(), insert.begin(), insert.end());
  out.insert(out.end(), base.begin() + offset + len, base.end());
  return out;
}

}  // namespace

IrrepMap::IrrepMap(std::vector<int> in_labels, std::vector<int> out_labels)
    : in_(std::move(in_labels)), out_(std::move(out_labels)), rows_(dimension(out_)), cols_(dimension(in_)) {
  m_.resize(rows_ * cols_);
}

IrrepMap IrrepMap::identity(const std::vector<int>& labels) {
  IrrepMap m(labels, labels);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = 1;
  return m;
}

IrrepMap IrrepMap::scalar(const Rational& v) {
  IrrepMap m({}, {});
  m(0, 0) = v;
  return m;
}

const Rational& IrrepMap::value() const {
  require(in_.empty() && out_.empty(), "value() of an open map");
  return m_[0];
}

bool IrrepMap::is_zero() const {
  for (const auto& e : m_) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

IrrepMap& IrrepMap::operator+=(const IrrepMap& o) {
  require(in_ == o.in_ && out_ == o.out_, "label mismatch in sum");
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

IrrepMap& IrrepMap::operator*=(const Rational& c) {
  for (auto& e : m_) e *= c;
  return *this;
}

IrrepMap compose(const IrrepMap& f, const IrrepMap& g) {
  require(f.in_labels() == g.out_labels(), "compose: label mismatch");
  IrrepMap r(g.in_labels(), f.out_labels());
  Rational tmp;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const Rational& fv = f(i, k);
      if (sgn(fv) == 0) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const Rational& gv = g(k, j);
        if (sgn(gv) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), fv.get_mpq_t(), gv.get_mpq_t());
        r(i, j) += tmp;
      }
    }
  }
  return r;
}

IrrepMap tensor(const IrrepMap& f, const IrrepMap& g) {
  std::vector<int> in(f.in_labels()), out(f.out_labels());
  in.insert(in.end(), g.in_labels().begin(), g.in_labels().end());
  out.insert(out.end(), g.out_labels().begin(), g.out_labels().end());
  IrrepMap r(in, out);
  for (std::size_t fr = 0; fr < f.rows(); ++fr) {
    for (std::size_t fc = 0; fc < f.cols(); ++fc) {
      const Rational& fv = f(fr, fc);
      if (sgn(fv) == 0) continue;
      for (std::size_t gr = 0; gr < g.rows(); ++gr) {
        for (std::size_t gc = 0; gc < g.cols(); ++gc) {
          const Rational& gv = g(gr, gc);
          if (sgn(gv) == 0) continue;
          r(fr * g.rows() + gr, fc * g.cols() + gc) = fv * gv;
        }
      }
    }
  }
  return r;
}

IrrepMap act_on_factors(const IrrepMap& f, int offset, const IrrepMap& g) {
  const auto& gout = g.out_labels();
  const std::size_t len = f.in_labels().size();
  require(offset >= 0 && offset + len <= gout.size(), "act_on_factors: factors out of range");
  for (std::size_t i = 0; i < len; ++i) require(gout[offset + i] == f.in_labels()[i], "act_on_factors: label mismatch");
  IrrepMap r(g.in_labels(), splice(gout, offset, len, f.out_labels()));
  const std::size_t n_prefix = dimension(gout, 0, offset);
  const std::size_t n_suffix = dimension(gout, offset + len, gout.size());
  Rational tmp;
  for (std::size_t col = 0; col < g.cols(); ++col) {
    for (std::size_t p = 0; p < n_prefix; ++p) {
      for (std::size_t s = 0; s < n_suffix; ++s) {
        for (std::size_t fi = 0; fi < f.cols(); ++fi) {
          const Rational& gv = g((p * f.cols() + fi) * n_suffix + s, col);
          if (sgn(gv) == 0) continue;
          for (std::size_t fo = 0; fo < f.rows(); ++fo) {
            const Rational& fv = f(fo, fi);
            if (sgn(fv) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), fv.get_mpq_t(), gv.get_mpq_t());
            r((p * f.rows() + fo) * n_suffix + s, col) += tmp;
          }
        }
      }
    }
  }
  return r;
}

IrrepMap precompose_on_factors(const IrrepMap& g, int offset, const IrrepMap& f) {
  const auto& gin = g.in_labels();
  const std::size_t len = f.out_labels().size();
  require(offset >= 0 && offset + len <= gin.size(), "precompose_on_factors: factors out of range");
  for (std::size_t i = 0; i < len; ++i) require(gin[offset + i] == f.out_labels()[i], "precompose_on_factors: label mismatch");
  IrrepMap r(splice(gin, offset, len, f.in_labels()), g.out_labels());
  const std::size_t n_prefix = dimension(gin, 0, offset);
  const std::size_t n_suffix = dimension(gin, offset + len, gin.size());
  Rational tmp;
  for (std::size_t row = 0; row < g.rows(); ++row) {
    for (std::size_t p = 0; p < n_prefix; ++p) {
      for (std::size_t s = 0; s < n_suffix; ++s) {
        for (std::size_t fo = 0; fo < f.rows(); ++fo) {
          const Rational& gv = g(row, (p * f.rows() + fo) * n_suffix + s);
          if (sgn(gv) == 0) continue;
          for (std::size_t fi = 0; fi < f.cols(); ++fi) {
            const Rational& fv = f(fo, fi);
            if (sgn(fv) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), fv.get_mpq_t(), gv.get_mpq_t());
            r(row, (p * f.cols() + fi) * n_suffix + s) += tmp;
          }
        }
      }
    }
  }
  return r;
}

Rational trace(const IrrepMap& f) {
  require(f.in_labels() == f.out_labels(), "trace: not an endomorphism");
  Rational sum = 0;
  for (std::size_t i = 0; i < f.rows(); ++i) sum += f(i, i);
  return sum;
}

IrrepMap cg_injection(const AdmissibleTriple& t) {
  const int a = t.a(), b = t.b(), c = t.c();
  const int al = t.alpha(), be = t.beta(), ga = t.gamma();
  IrrepMap m({c}, {a, b});
  // u_k has k factors e2; i of them among the first beta legs, j among the
  // last alpha. Of the gamma arcs, m send e2 to the a side.
  for (int k = 0; k <= c; ++k) {
    Rational norm(Integer(1), binomial(c, k));
    for (int i = std::max(0, k - al); i <= std::min(k, be); ++i) {
      int j = k - i;
      Integer w = binomial(be, i) * binomial(al, j);
      for (int mm = 0; mm <= ga; ++mm) {
        Integer term = w * binomial(ga, mm);
        if (mm % 2 == 1) term = -term;
        int p = i + mm;
        int q = j + ga - mm;
        m(static_cast<std::size_t>(p) * (b + 1) + q, k) += Rational(term) * norm;
      }
    }
  }
  return m;
}

IrrepMap cg_projection(const AdmissibleTriple& t) {
  // The transpose in the word basis. With <u_k, u_l> = delta_kl / C(n,k) the
  // reduced matrix picks up binomial weights.
  const int a = t.a(), b = t.b(), c = t.c();
  IrrepMap inj = cg_injection(t);
  IrrepMap m({a, b}, {c});
  for (int k = 0; k <= c; ++k) {
    for (int p = 0; p <= a; ++p) {
      for (int q = 0; q <= b; ++q) {
        std::size_t row = static_cast<std::size_t>(p) * (b + 1) + q;
        const Rational& v = inj(row, k);
        if (sgn(v) == 0) continue;
        Rational w(binomial(c, k), binomial(a, p) * binomial(b, q));
        w.canonicalize();
        m(k, row) = v * w;
      }
    }
  }
  return m;
}

namespace {

// Word index of the tensor of canonical representatives e1^{l-k} e2^k.
std::size_t canonical_word(const std::vector<int>& labels, const std::vector<int>& ks) {
  std::size_t w = 0;
  for (std::size_t f = 0; f < labels.size(); ++f) {
    for (int s = 0; s < labels[f]; ++s) w = (w << 1) | (s >= labels[f] - ks[f] ? 1u : 0u);
  }
  return w;
}

bool next_multi_index(const std::vector<int>& labels, std::vector<int>& ks) {
  for (std::size_t f = labels.size(); f-- > 0;) {
    if (ks[f] < labels[f]) {
      ++ks[f];
      return true;
    }
    ks[f] = 0;
  }
  return false;
}

}  // namespace

IrrepMap to_irrep_basis(const NetworkMap& f, const std::vector<int>& in_labels, const std::vector<int>& out_labels) {
  int n_in = std::accumulate(in_labels.begin(), in_labels.end(), 0);
  int n_out = std::accumulate(out_labels.begin(), out_labels.end(), 0);
  require(n_in == f.inputs() && n_out == f.outputs(), "to_irrep_basis: strand counts do not match labels");
  IrrepMap r(in_labels, out_labels);
  std::vector<int> kin(in_labels.size(), 0);
  std::size_t col = 0;
  do {
    // Input vector: tensor product of u_k, each word weighted 1/C(l,k).
    std::vector<Rational> vec(f.cols());
    for (std::size_t w = 0; w < f.cols(); ++w) {
      Rational weight = 1;
      int shift = n_in;
      for (std::size_t fct = 0; fct < in_labels.size(); ++fct) {
        shift -= in_labels[fct];
        std::size_t bits = (w >> shift) & ((std::size_t{1} << in_labels[fct]) - 1);
        if (std::popcount(bits) != kin[fct]) {
          weight = 0;
          break;
        }
        weight /= Rational(binomial(in_labels[fct], kin[fct]));
      }
      vec[w] = weight;
    }
    std::vector<int> kout(out_labels.size(), 0);
    std::size_t row = 0;
    do {
      std::size_t word = canonical_word(out_labels, kout);
      Rational sum = 0;
      for (std::size_t w = 0; w < f.cols(); ++w) {
        if (sgn(vec[w]) != 0) sum += f(word, w) * vec[w];
      }
      for (std::size_t fct = 0; fct < out_labels.size(); ++fct) sum *= Rational(binomial(out_labels[fct], kout[fct]));
      r(row, col) = sum;
      ++row;
    } while (next_multi_index(out_labels, kout));
    ++col;
  } while (next_multi_index(in_labels, kin));
  return r;
}

}  // namespace spinnet
