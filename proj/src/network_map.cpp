#include "spinnet/network_map.hpp"

#include "spinnet/errors.hpp"

#include <atomic>
#include <string>

namespace spinnet {

namespace {

std::atomic<int> g_strand_cap{16};

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

int strand_cap() noexcept { return g_strand_cap.load(); }

void set_strand_cap(int cap) {
  if (cap < 2 || cap > 30) throw DomainError("strand cap must lie in [2, 30]");
  g_strand_cap.store(cap);
}

NetworkMap::NetworkMap(int inputs, int outputs) : inputs_(inputs), outputs_(outputs) {
  require(inputs >= 0 && outputs >= 0, "negative arity");
  if (inputs + outputs > strand_cap()) {
    throw ResourceError("network with " + std::to_string(inputs + outputs) + " open strands exceeds the cap of " +
                        std::to_string(strand_cap()));
  }
  entries_.resize(rows() * cols());
}

NetworkMap NetworkMap::identity(int strands) {
  NetworkMap m(strands, strands);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = 1;
  return m;
}

NetworkMap NetworkMap::scalar(const Rational& v) {
  NetworkMap m(0, 0);
  m(0, 0) = v;
  return m;
}

const Rational& NetworkMap::value() const {
  require(inputs_ == 0 && outputs_ == 0, "value() of an open network");
  return entries_[0];
}

bool NetworkMap::is_zero() const {
  for (const auto& e : entries_) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

NetworkMap NetworkMap::transposed() const {
  NetworkMap t(outputs_, inputs_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

NetworkMap& NetworkMap::operator+=(const NetworkMap& o) {
  require(inputs_ == o.inputs_ && outputs_ == o.outputs_, "arity mismatch in sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

NetworkMap& NetworkMap::operator-=(const NetworkMap& o) {
  require(inputs_ == o.inputs_ && outputs_ == o.outputs_, "arity mismatch in difference");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

NetworkMap& NetworkMap::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

NetworkMap compose(const NetworkMap& f, const NetworkMap& g) {
  require(f.inputs() == g.outputs(), "compose: arity mismatch");
  NetworkMap r(g.inputs(), f.outputs());
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

NetworkMap tensor(const NetworkMap& f, const NetworkMap& g) {
  NetworkMap r(f.inputs() + g.inputs(), f.outputs() + g.outputs());
  for (std::size_t fr = 0; fr < f.rows(); ++fr) {
    for (std::size_t fc = 0; fc < f.cols(); ++fc) {
      const Rational& fv = f(fr, fc);
      if (sgn(fv) == 0) continue;
      for (std::size_t gr = 0; gr < g.rows(); ++gr) {
        for (std::size_t gc = 0; gc < g.cols(); ++gc) {
          const Rational& gv = g(gr, gc);
          if (sgn(gv) == 0) continue;
          r((fr << g.outputs()) | gr, (fc << g.inputs()) | gc) = fv * gv;
        }
      }
    }
  }
  return r;
}

NetworkMap act_on_legs(const NetworkMap& f, int offset, const NetworkMap& g) {
  require(offset >= 0 && offset + f.inputs() <= g.outputs(), "act_on_legs: legs out of range");
  const int rest = g.outputs() - offset - f.inputs();
  NetworkMap r(g.inputs(), g.outputs() - f.inputs() + f.outputs());
  const std::size_t n_prefix = std::size_t{1} << offset;
  const std::size_t n_suffix = std::size_t{1} << rest;
  Rational tmp;
  for (std::size_t col = 0; col < g.cols(); ++col) {
    for (std::size_t p = 0; p < n_prefix; ++p) {
      for (std::size_t s = 0; s < n_suffix; ++s) {
        for (std::size_t fi = 0; fi < f.cols(); ++fi) {
          const Rational& gv = g((((p << f.inputs()) | fi) << rest) | s, col);
          if (sgn(gv) == 0) continue;
          for (std::size_t fo = 0; fo < f.rows(); ++fo) {
            const Rational& fv = f(fo, fi);
            if (sgn(fv) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), fv.get_mpq_t(), gv.get_mpq_t());
            r((((p << f.outputs()) | fo) << rest) | s, col) += tmp;
          }
        }
      }
    }
  }
  return r;
}

NetworkMap precompose_on_legs(const NetworkMap& g, int offset, const NetworkMap& f) {
  require(offset >= 0 && offset + f.outputs() <= g.inputs(), "precompose_on_legs: legs out of range");
  const int rest = g.inputs() - offset - f.outputs();
  NetworkMap r(g.inputs() - f.outputs() + f.inputs(), g.outputs());
  const std::size_t n_prefix = std::size_t{1} << offset;
  const std::size_t n_suffix = std::size_t{1} << rest;
  Rational tmp;
  for (std::size_t row = 0; row < g.rows(); ++row) {
    for (std::size_t p = 0; p < n_prefix; ++p) {
      for (std::size_t s = 0; s < n_suffix; ++s) {
        for (std::size_t fo = 0; fo < f.rows(); ++fo) {
          const Rational& gv = g(row, (((p << f.outputs()) | fo) << rest) | s);
          if (sgn(gv) == 0) continue;
          for (std::size_t fi = 0; fi < f.cols(); ++fi) {
            const Rational& fv = f(fo, fi);
            if (sgn(fv) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), fv.get_mpq_t(), gv.get_mpq_t());
            r(row, (((p << f.inputs()) | fi) << rest) | s) += tmp;
          }
        }
      }
    }
  }
  return r;
}

Rational contract_closed(const NetworkMap& f) { return f.value(); }

}  // namespace spinnet
