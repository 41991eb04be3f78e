#pragma once

#include "spinnet/irrep_map.hpp"
#include "spinnet/network_map.hpp"
#include "spinnet/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace spinnet {

/// Arguments of a 6j-symbol {a b c; d e f}. The symbol is the coefficient of
/// the left up-tree with inner edge f in the expansion of the right up-tree
/// with inner edge e, both maps V_d -> V_a (x) V_b (x) V_c.
///
/// Required admissible triples: (a,e,d), (b,c,e), (a,b,f), (f,c,d).
struct SixJKey {
  int a, b, c, d, e, f;
  friend auto operator<=>(const SixJKey&, const SixJKey&) = default;
};

bool is_valid(const SixJKey& k) noexcept;
std::string to_string(const SixJKey& k);

// Trees, as dense maps. H-tree and fused tree go V_d (x) V_c -> V_a (x) V_b.
NetworkMap h_tree(int a, int b, int c, int d, int e);
NetworkMap fused_tree(int a, int b, int c, int d, int f);
NetworkMap up_tree_right(int a, int b, int c, int d, int e);
NetworkMap up_tree_left(int a, int b, int c, int d, int f);

// The same trees in the reduced bases.
IrrepMap h_tree_reduced(int a, int b, int c, int d, int e);
IrrepMap fused_tree_reduced(int a, int b, int c, int d, int f);
IrrepMap up_tree_right_reduced(int a, int b, int c, int d, int e);
IrrepMap up_tree_left_reduced(int a, int b, int c, int d, int f);

/// {a b c; d e f} from the up-tree change of basis. Memoized.
Rational sixj_general(const SixJKey& k);
/// Same value from dense networks; bounded by the strand cap.
Rational sixj_general_dense(const SixJKey& k);
/// {a b c; d e f}': coefficient of the fused tree f in the H-tree e.
Rational sixj_prime(const SixJKey& k);
Rational sixj_prime_dense(const SixJKey& k);

/// Alternating: the closed forms carry the parity sign (-1)^i. These match
/// the contraction in magnitude only. Uniform: the sign is -1 throughout,
/// which makes the expansions exact with these vertex conventions.
enum class SignConvention { alternating, uniform };

/// The closed forms for {1 a b; c+cs c a+as}, cs and as in {+1, -1}.
Rational sixj_special(int a, int b, int c, int c_shift, int a_shift,
                     SignConvention conv = SignConvention::uniform);

struct RecouplingTerm {
  Rational coefficient;
  int target;  // inner label of the fused tree, a+1 or a-1
};

/// Two-term expansion of the H-tree (1, a, b, c; c+e_shift) in fused
/// trees (1, a, b, c; a+-1). Inadmissible targets are omitted.
std::vector<RecouplingTerm> recoupling_1abc(int e_shift, int a, int b, int c,
                                            SignConvention conv = SignConvention::uniform);

}  // namespace spinnet
