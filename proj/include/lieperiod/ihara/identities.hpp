// Closed-form expansions relating D_{phi_n}(phi_p), Ihara brackets and Lie
// brackets of the generators, and the linear relations they imply.
//
// Each *_family function returns the coefficient family as a PairRelation
// (not canonicalized: the scale is meaningful); the matching evaluation
// function sums the family in the free associative algebra.
#pragma once

#include "lieperiod/freelie/ncpoly.hpp"
#include "lieperiod/ihara/derivation.hpp"
#include "lieperiod/ihara/pair_relation.hpp"

namespace lieperiod::ihara {

// D_{phi_n}(phi_p) = sum_{k=1}^{p-1} C(n+p-1-k, p-k) [phi_k, phi_{n+p-k}]
PairRelation dptop2_family(int n, int p);
NCPoly d_phi_closed(int n, int p);

// {phi_n, phi_p} = sum_k (C(n+p-1-k, n-k) - C(n+p-1-k, p-k)) [phi_k, phi_{n+p-k}]
PairRelation ptof_family(int n, int p);
NCPoly ihara_bracket_closed(int n, int p);

// [phi_n, phi_p] = -1/(n-1) sum_{i=0}^{p} C(n-2+i, n-2) b_i D_{phi_{n-1+i}}(phi_{p+1-i})
// Requires n >= 2 (std::domain_error otherwise) and p >= 1.
PairRelation dpcroch_family(int n, int p);
NCPoly bracket_from_derivations(int n, int p, DerivationSign sign = DerivationSign::f_then_a);

// [phi_m, phi_k] = sum_{i=0}^{m} C(k-1+i, k-1) b_i/(k-1+i) {phi_{m-i+1}, phi_{k+i-1}}
// for even m >= 2 and k >= 2. The i = m term is a {phi_1, .} bracket and
// vanishes. Odd m throws std::domain_error.
PairRelation ltop_family(int m, int k);
NCPoly bracket_from_ihara(int m, int k, DerivationSign sign = DerivationSign::f_then_a);

/// sum_{i=0}^{n} C(n-2+i, n-2) b_i D_{phi_{n-1+i}}(phi_{n+1-i}) = 0, n >= 2.
PairRelation relation_dpcroch1(int n);

/// sum_{i=1}^{n+p-1} (C(i-1, i-p+1) b_{i-p+1}/(p-1) + C(i-1, i-n+1) b_{i-n+1}/(n-1))
///   D_{phi_i}(phi_{n+p-i}) = 0, n, p >= 2.
PairRelation relation_dpcroch2(int n, int p);

/// Raw weight-4n family sum_{i=0}^{2n} C(2n-2+i, 2n-2) b_i {phi_{2n-i+1}, phi_{2n+i-1}}.
PairRelation cor1_terms(int n);
/// canonicalize(cor1_terms(n)), n >= 1.
PairRelation relation_cor1(int n);

/// Raw weight-(2n+2p) family
///   sum_{i=1}^{2n+2p-1} (C(i-1, i-2p+1) b_{i-2p+1}/(2p-1) + C(i-1, i-2n+1) b_{i-2n+1}/(2n-1))
///     {phi_{2n+2p-i}, phi_i}.
PairRelation cor2_terms(int n, int p);
/// canonicalize(cor2_terms(n, p)), n, p >= 1.
PairRelation relation_cor2(int n, int p);

}  // namespace lieperiod::ihara
