// Linear combinations sum a_ij X(phi_i, phi_j) of brackets of generators,
// where X is the Ihara bracket, the Lie bracket, or D_{phi_i}(phi_j).
#pragma once

#include "lieperiod/arith/rational.hpp"
#include "lieperiod/freelie/ncpoly.hpp"
#include "lieperiod/ihara/derivation.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace lieperiod::ihara {

enum class PairKind { ihara, lie, derivation };

std::string_view to_string(PairKind kind);
std::optional<PairKind> parse_pair_kind(std::string_view name);

struct PairRelation {
  using Key = std::pair<int, int>;

  int weight = 0;
  PairKind kind = PairKind::ihara;
  std::map<Key, Rational> coeffs;

  PairRelation() = default;
  PairRelation(int w, PairKind k) : weight(w), kind(k) {}

  /// Accumulates c into the (i, j) coefficient. Throws std::invalid_argument
  /// unless i, j >= 1 and i + j == weight.
  void add(int i, int j, const Rational& c);

  bool empty() const { return coeffs.empty(); }
  Rational coeff(int i, int j) const;

  friend bool operator==(const PairRelation&, const PairRelation&) = default;
};

/// Normal form used for golden comparisons.
///
/// ihara / lie: antisymmetric pairs folded onto i < j, diagonal pairs
/// dropped, {phi_1, .} dropped for the Ihara bracket (it vanishes), then
/// scaled to coprime integers with the largest-i coefficient positive.
/// derivation: zero coefficients and D_{phi_i}(phi_1) = 0 keys dropped, the
/// scale is kept.
PairRelation canonicalize(const PairRelation& rel);
bool is_canonical(const PairRelation& rel);

/// sum a_ij X(phi_i, phi_j) as an element of the free associative algebra.
NCPoly evaluate(const PairRelation& rel, DerivationSign sign = DerivationSign::f_then_a);

/// True when evaluate(rel) is the zero polynomial.
bool annihilates(const PairRelation& rel, DerivationSign sign = DerivationSign::f_then_a);

/// True when a and b are nonzero multiples of one another (both empty counts).
bool proportional(const PairRelation& a, const PairRelation& b);

/// Text such as "9*{5,7} - 14*{3,9}"; "[i,j]" for Lie and "D(i,j)" for
/// derivation kinds. Terms are listed by i ascending.
std::string to_string(const PairRelation& rel);

}  // namespace lieperiod::ihara

namespace lieperiod {
using ihara::PairKind;
using ihara::PairRelation;
}  // namespace lieperiod
