#include "spinnet/recoupling.hpp"

#include "spinnet/combinatorics.hpp"
#include "spinnet/diagrams.hpp"
#include "spinnet/errors.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace spinnet {

namespace {

AdmissibleTriple vertex(int a, int b, int c) { return AdmissibleTriple::make(a, b, c); }

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

void require_key(const SixJKey& k) {
  if (!is_valid(k)) throw DomainError("6j key " + to_string(k) + " has an inadmissible triple");
}

// Builds a map column by column: each basis word of the inputs is pushed
// through `layers` as a 0 -> n state, so only the widest slice counts
// against the strand cap.
NetworkMap columnwise(int inputs, int outputs, const std::function<NetworkMap(NetworkMap)>& layers) {
  NetworkMap out(inputs, outputs);
  for (std::size_t col = 0; col < out.cols(); ++col) {
    NetworkMap state(0, inputs);
    state(col, 0) = 1;
    NetworkMap img = layers(std::move(state));
    for (std::size_t row = 0; row < out.rows(); ++row) out(row, col) = img(row, 0);
  }
  return out;
}

Rational matrix_trace(const NetworkMap& m) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

}  // namespace

bool is_valid(const SixJKey& k) noexcept {
  return is_admissible(k.a, k.e, k.d) && is_admissible(k.b, k.c, k.e) && is_admissible(k.a, k.b, k.f) &&
         is_admissible(k.f, k.c, k.d);
}

std::string to_string(const SixJKey& k) {
  return "{" + std::to_string(k.a) + " " + std::to_string(k.b) + " " + std::to_string(k.c) + "; " +
         std::to_string(k.d) + " " + std::to_string(k.e) + " " + std::to_string(k.f) + "}";
}

NetworkMap h_tree(int a, int b, int c, int d, int e) {
  auto v1 = vertex(a, e, d), v2 = vertex(e, c, b);
  return columnwise(d + c, a + b, [&](NetworkMap s) {
    s = act_on_legs(clebsch_injection(v1), 0, s);
    return act_on_legs(clebsch_projection(v2), a, s);
  });
}

NetworkMap fused_tree(int a, int b, int c, int d, int f) {
  auto v1 = vertex(d, c, f), v2 = vertex(a, b, f);
  return columnwise(d + c, a + b, [&](NetworkMap s) {
    s = act_on_legs(clebsch_projection(v1), 0, s);
    return act_on_legs(clebsch_injection(v2), 0, s);
  });
}

NetworkMap up_tree_right(int a, int b, int c, int d, int e) {
  auto v1 = vertex(a, e, d), v2 = vertex(b, c, e);
  return columnwise(d, a + b + c, [&](NetworkMap s) {
    s = act_on_legs(clebsch_injection(v1), 0, s);
    return act_on_legs(clebsch_injection(v2), a, s);
  });
}

NetworkMap up_tree_left(int a, int b, int c, int d, int f) {
  auto v1 = vertex(f, c, d), v2 = vertex(a, b, f);
  return columnwise(d, a + b + c, [&](NetworkMap s) {
    s = act_on_legs(clebsch_injection(v1), 0, s);
    return act_on_legs(clebsch_injection(v2), 0, s);
  });
}

IrrepMap h_tree_reduced(int a, int b, int c, int d, int e) {
  IrrepMap m = act_on_factors(cg_injection(vertex(a, e, d)), 0, IrrepMap::identity({d, c}));
  return act_on_factors(cg_projection(vertex(e, c, b)), 1, m);
}

IrrepMap fused_tree_reduced(int a, int b, int c, int d, int f) {
  return compose(cg_injection(vertex(a, b, f)), cg_projection(vertex(d, c, f)));
}

IrrepMap up_tree_right_reduced(int a, int b, int c, int d, int e) {
  return act_on_factors(cg_injection(vertex(b, c, e)), 1, cg_injection(vertex(a, e, d)));
}

IrrepMap up_tree_left_reduced(int a, int b, int c, int d, int f) {
  return act_on_factors(cg_injection(vertex(a, b, f)), 0, cg_injection(vertex(f, c, d)));
}

namespace {

// Dual of the left up-tree: V_a (x) V_b (x) V_c -> V_d.
IrrepMap up_tree_left_dual(const SixJKey& k) {
  return precompose_on_factors(cg_projection(vertex(k.f, k.c, k.d)), 0, cg_projection(vertex(k.a, k.b, k.f)));
}

struct SixJCache {
  std::mutex mu;
  std::map<SixJKey, Rational> general;
  std::map<SixJKey, Rational> prime;
};

SixJCache& sixj_cache() {
  static SixJCache cache;
  return cache;
}

template <class Compute>
Rational cached(std::map<SixJKey, Rational>& table, const SixJKey& k, Compute compute) {
  auto& cache = sixj_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = table.find(k);
    if (it != table.end()) return it->second;
  }
  Rational v = compute();
  std::lock_guard lock(cache.mu);
  table.emplace(k, v);
  return v;
}

}  // namespace

Rational sixj_general(const SixJKey& k) {
  require_key(k);
  return cached(sixj_cache().general, k, [&k]() -> Rational {
    IrrepMap dual = up_tree_left_dual(k);
    // Bubble identity: the left tree is orthogonal to every other f, so the
    // coefficient is a ratio of two closed contractions.
    Rational num = trace(compose(dual, up_tree_right_reduced(k.a, k.b, k.c, k.d, k.e)));
    Rational den = trace(compose(dual, up_tree_left_reduced(k.a, k.b, k.c, k.d, k.f)));
    return num / den;
  });
}

Rational sixj_general_dense(const SixJKey& k) {
  require_key(k);
  auto top = vertex(k.a, k.b, k.f), bottom = vertex(k.f, k.c, k.d);
  auto dual = [&](NetworkMap s) {
    s = act_on_legs(clebsch_projection(top), 0, s);
    return act_on_legs(clebsch_projection(bottom), 0, s);
  };
  auto e1 = vertex(k.a, k.e, k.d), e2 = vertex(k.b, k.c, k.e);
  NetworkMap right = columnwise(k.d, k.d, [&](NetworkMap s) {
    s = act_on_legs(clebsch_injection(e1), 0, s);
    return dual(act_on_legs(clebsch_injection(e2), k.a, s));
  });
  NetworkMap left = columnwise(k.d, k.d, [&](NetworkMap s) {
    s = act_on_legs(clebsch_injection(bottom), 0, s);
    return dual(act_on_legs(clebsch_injection(top), 0, s));
  });
  return trace_closure(right) / trace_closure(left);
}

Rational sixj_prime(const SixJKey& k) {
  require_key(k);
  return cached(sixj_cache().prime, k, [&k]() -> Rational {
    // Close the H-tree against the fused tree's two vertices around edge f.
    IrrepMap closed = compose(cg_projection(vertex(k.a, k.b, k.f)),
                              compose(h_tree_reduced(k.a, k.b, k.c, k.d, k.e), cg_injection(vertex(k.d, k.c, k.f))));
    IrrepMap norm = compose(cg_projection(vertex(k.a, k.b, k.f)),
                            compose(fused_tree_reduced(k.a, k.b, k.c, k.d, k.f), cg_injection(vertex(k.d, k.c, k.f))));
    return trace(closed) / trace(norm);
  });
}

Rational sixj_prime_dense(const SixJKey& k) {
  require_key(k);
  auto top = vertex(k.a, k.b, k.f), bottom = vertex(k.d, k.c, k.f);
  auto h1 = vertex(k.a, k.e, k.d), h2 = vertex(k.e, k.c, k.b);
  NetworkMap closed = columnwise(k.f, k.f, [&](NetworkMap s) {
    s = act_on_legs(clebsch_injection(bottom), 0, s);
    s = act_on_legs(clebsch_injection(h1), 0, s);
    s = act_on_legs(clebsch_projection(h2), k.a, s);
    return act_on_legs(clebsch_projection(top), 0, s);
  });
  NetworkMap norm = columnwise(k.f, k.f, [&](NetworkMap s) {
    s = act_on_legs(clebsch_injection(bottom), 0, s);
    s = act_on_legs(clebsch_projection(bottom), 0, s);
    s = act_on_legs(clebsch_injection(top), 0, s);
    return act_on_legs(clebsch_projection(top), 0, s);
  });
  return matrix_trace(closed) / matrix_trace(norm);
}

Rational sixj_special(int a, int b, int c, int c_shift, int a_shift, SignConvention conv) {
  const bool alternating = conv == SignConvention::alternating;
  if ((c_shift != 1 && c_shift != -1) || (a_shift != 1 && a_shift != -1)) {
    throw DomainError("sixj_special: shifts must be +1 or -1");
  }
  SixJKey k{1, a, b, c + c_shift, c, a + a_shift};
  require_key(k);
  if (c_shift == 1 && a_shift == 1) return 1;
  if (c_shift == 1) {
    Rational v((alternating ? sign_pow((a - b + c + 2) / 2) : -1) * (a + b - c), 2 * (a + 1));
    v.canonicalize();
    return v;
  }
  if (a_shift == 1) {
    Rational v((alternating ? sign_pow((a - b + c) / 2) : 1) * (-a + b + c), 2 * c);
    v.canonicalize();
    return v;
  }
  Rational v((a + b + c + 2) * (a - b + c), 4 * (a + 1) * c);
  v.canonicalize();
  return v;
}

std::vector<RecouplingTerm> recoupling_1abc(int e_shift, int a, int b, int c, SignConvention conv) {
  if (e_shift != 1 && e_shift != -1) throw DomainError("recoupling_1abc: e_shift must be +1 or -1");
  const int e = c + e_shift;
  if (!is_admissible(1, e, c) || !is_admissible(e, b, a)) {
    throw DomainError("recoupling_1abc: H-tree (1," + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + "; " + std::to_string(e) + ") is inadmissible");
  }
  const int i = (a + 1 - b + c) / 2;
  const int s = conv == SignConvention::alternating ? sign_pow(i) : -1;
  std::vector<RecouplingTerm> out;
  auto push = [&](int target, Rational coeff) {
    coeff.canonicalize();
    if (is_admissible(1, a, target) && is_admissible(c, b, target) && sgn(coeff) != 0) {
      out.push_back({coeff, target});
    }
  };
  if (e_shift == -1) {
    push(a + 1, 1);
    if (a >= 1) push(a - 1, Rational(-s * (a + b - c + 1), 2 * (a + 1)));
  } else {
    push(a + 1, Rational(s * (-a + b + c + 1), 2 * (c + 1)));
    if (a >= 1) push(a - 1, Rational((a + b + c + 3) * (a - b + c + 1), 4 * (a + 1) * (c + 1)));
  }
  return out;
}

}  // namespace spinnet
