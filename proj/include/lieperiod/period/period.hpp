// Period polynomials: the weight-w slash action of 2x2 integer matrices,
// the period relations, Kohnen-Zagier building blocks, and the map from
// Ihara-bracket relations to polynomials in t.
#pragma once

#include "lieperiod/arith/polyq.hpp"
#include "lieperiod/ihara/pair_relation.hpp"

#include <string>

namespace lieperiod::period {

struct IntMat2 {
  long a = 1, b = 0, c = 0, d = 1;

  long det() const { return a * d - b * c; }

  static constexpr IntMat2 identity() { return {1, 0, 0, 1}; }
  /// (0, -1; 1, 0): P|S = t^w P(-1/t)
  static constexpr IntMat2 S() { return {0, -1, 1, 0}; }
  /// (1, -1; 1, 0): P|U = t^w P(1 - 1/t)
  static constexpr IntMat2 U() { return {1, -1, 1, 0}; }

  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const IntMat2&, const IntMat2&) = default;
};

/// A polynomial of degree <= w carrying its weight w (even, >= 2).
class WeightedPoly {
 public:
  /// Throws std::invalid_argument if w is odd, w < 2, or deg(poly) > w.
  WeightedPoly(PolyQ poly, int w);

  const PolyQ& poly() const { return poly_; }
  int weight() const { return weight_; }

  friend bool operator==(const WeightedPoly&, const WeightedPoly&) = default;

 private:
  PolyQ poly_;
  int weight_;
};

/// q(t) = p(at + b, ct + d) where p(X, Y) = Y^w P(X/Y). This is a right
/// action: (P|M1)|M2 = P|(M1 M2).
PolyQ slash_action(const WeightedPoly& p, const IntMat2& m);

/// P + P|S = 0 and P + P|U + P|U^2 = 0, as exact polynomial identities.
bool is_period_polynomial(const WeightedPoly& p);

enum class Sign { plus, minus };

/// P^+-_{n;k}(t) = +-1/(n+1) [B_{n+1}(t) -+ t^w B_{n+1}(1/t)]
///                + 1/(p+1) [B_{p+1}(t) -+ t^w B_{p+1}(1/t)],  w = k - 2 = n + p.
/// Requires k even, w >= 2 and 1 <= n <= w - 1 (std::domain_error otherwise).
/// These are period polynomials for n odd (plus) and n even (minus).
PolyQ kz_building_block(int n, int k, Sign sign);

/// G_{n,p} = 1/((n-1)!(p-1)!) * 1/p * (eps B_p(t) - t^{n+p-2} B_p(1/t)),
/// n >= 2 (std::domain_error otherwise), p >= 1, eps = +-1.
PolyQ g_special(int n, int p, int eps);

/// n! p! (G_{n+1,p+1} + G_{p+1,n+1}) with eps = +1 for plus, and
/// n! p! (G_{n+1,p+1} - G_{p+1,n+1}) with eps = -1 for minus.
/// The plus combination equals P^+_{n;n+p+2}; the minus one equals -P^-_{n;n+p+2}.
PolyQ kz_from_specialization(int n, int p, Sign sign);

/// <f, g> = f g(1) - f(1) g
PolyQ angle_bracket(const PolyQ& f, const PolyQ& g);

/// {phi_i, phi_j} -> (t^{i-1} - t^{j-1}) / ((i-1)! (j-1)!), weight w = rel.weight - 2.
/// Requires an Ihara-kind relation whose indices are all odd and >= 3
/// (std::domain_error otherwise).
WeightedPoly substitute_relation(const PairRelation& rel);

/// "c_w*t^w + ... + c_0"
std::string to_string(const WeightedPoly& p);

}  // namespace lieperiod::period
