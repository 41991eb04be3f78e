#pragma once

#include "spinnet/combinatorics.hpp"
#include "spinnet/mat2.hpp"
#include "spinnet/network_map.hpp"

#include <vector>

namespace spinnet {

enum class Primitive {
  identity,     // V -> V
  cap,          // v (x) w -> v^T w
  cup,          // 1 -> e1 (x) e1 + e2 (x) e2
  cap_vertex,   // v (x) w -> det[v w]
  cup_vertex,   // 1 -> e1 (x) e2 - e2 (x) e1
  swap,         // v (x) w -> w (x) v
};

NetworkMap primitive(Primitive p);

/// Output leg i carries input leg perm[i].
NetworkMap permutation(const std::vector<int>& perm);

/// Symmetrizer on n strands built by the one-strand recurrence. Memoized.
const NetworkMap& symmetrizer(int n);
/// Reference construction: average of all n! permutations.
NetworkMap symmetrizer_by_permutations(int n);

/// n nested cup_vertex arcs (0 -> 2n); strand i is joined to strand 2n-1-i.
NetworkMap nested_cups(int n);
/// n nested cap_vertex arcs (2n -> 0).
NetworkMap nested_caps(int n);

/// Joins the last k outputs of f to its last k inputs around the right side.
NetworkMap close_strands(const NetworkMap& f, int k);
/// Closes every strand of an endomorphism.
Rational trace_closure(const NetworkMap& f);

NetworkMap matrix_map(const Mat2& x);
/// sym_n o X^{(x)n} o sym_n.
NetworkMap matrix_strand(const Mat2& x, int n);

/// Trivalent vertex V_c -> V_a (x) V_b, i.e. V^{(x)c} -> V^{(x)(a+b)}. Memoized.
const NetworkMap& clebsch_injection(const AdmissibleTriple& t);
/// Trivalent vertex V_a (x) V_b -> V_c. Memoized.
const NetworkMap& clebsch_projection(const AdmissibleTriple& t);

/// Closed network evaluation of chi_abc at unimodular (X1, X2).
Rational central_function_numeric(const AdmissibleTriple& t, const Mat2& x1, const Mat2& x2);

}  // namespace spinnet
