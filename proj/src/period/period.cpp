#include "lieperiod/period/period.hpp"

#include "lieperiod/arith/bernoulli.hpp"
#include "lieperiod/arith/rational.hpp"

#include <stdexcept>

namespace lieperiod::period {

using arith::bernoulli_polynomial;
using arith::factorial;
using arith::fraction;

WeightedPoly::WeightedPoly(PolyQ poly, int w) : poly_(std::move(poly)), weight_(w) {
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("WeightedPoly: weight must be even and >= 2");
  if (poly_.degree() > w) throw std::invalid_argument("WeightedPoly: degree exceeds weight");
}

PolyQ slash_action(const WeightedPoly& p, const IntMat2& m) {
  const int w = p.weight();
  const PolyQ x{Rational(m.b), Rational(m.a)};
  const PolyQ y{Rational(m.d), Rational(m.c)};
  PolyQ out;
  for (int k = 0; k <= p.poly().degree(); ++k) {
    const Rational c = p.poly().coeff(k);
    if (c == 0) continue;
    out += c * (x.pow(static_cast<unsigned>(k)) * y.pow(static_cast<unsigned>(w - k)));
  }
  return out;
}

bool is_period_polynomial(const WeightedPoly& p) {
  const IntMat2 u = IntMat2::U();
  if (!(p.poly() + slash_action(p, IntMat2::S())).is_zero()) return false;
  return (p.poly() + slash_action(p, u) + slash_action(p, u * u)).is_zero();
}

namespace {

// B_m(t) - s * t^w B_m(1/t)
PolyQ bernoulli_difference(int m, int w, const Rational& s) {
  const PolyQ bm = bernoulli_polynomial(m);
  return bm - s * bm.reversed(w);
}

}  // namespace

PolyQ kz_building_block(int n, int k, Sign sign) {
  const int w = k - 2;
  if (k % 2 != 0 || w < 2) throw std::domain_error("kz_building_block: k must be even and >= 4");
  if (n < 1 || n > w - 1) throw std::domain_error("kz_building_block: n must lie in [1, k-3]");
  const int p = w - n;
  const Rational s = sign == Sign::plus ? 1 : -1;
  return s * fraction(1, n + 1) * bernoulli_difference(n + 1, w, s) +
         fraction(1, p + 1) * bernoulli_difference(p + 1, w, s);
}

PolyQ g_special(int n, int p, int eps) {
  if (n < 2) throw std::domain_error("g_special: n must be >= 2");
  if (p < 1) throw std::invalid_argument("g_special: p must be >= 1");
  if (eps != 1 && eps != -1) throw std::invalid_argument("g_special: eps must be +1 or -1");
  const PolyQ bp = bernoulli_polynomial(p);
  const Rational scale = fraction(1, factorial(n - 1) * factorial(p - 1) * p);
  return scale * (Rational(eps) * bp - bp.reversed(n + p - 2));
}

PolyQ kz_from_specialization(int n, int p, Sign sign) {
  const Rational scale(factorial(n) * factorial(p));
  if (sign == Sign::plus) return scale * (g_special(n + 1, p + 1, 1) + g_special(p + 1, n + 1, 1));
  return scale * (g_special(n + 1, p + 1, -1) - g_special(p + 1, n + 1, -1));
}

PolyQ angle_bracket(const PolyQ& f, const PolyQ& g) { return g(Rational(1)) * f - f(Rational(1)) * g; }

WeightedPoly substitute_relation(const PairRelation& rel) {
  if (rel.kind != PairKind::ihara) throw std::domain_error("substitute_relation: needs an Ihara-bracket relation");
  PolyQ out;
  for (const auto& [key, c] : rel.coeffs) {
    const auto [i, j] = key;
    if (i < 3 || j < 3 || i % 2 == 0 || j % 2 == 0)
      throw std::domain_error("substitute_relation: indices must be odd and >= 3");
    const Rational scale = c / Rational(factorial(i - 1) * factorial(j - 1));
    out += scale * (PolyQ::monomial(1, i - 1) - PolyQ::monomial(1, j - 1));
  }
  return WeightedPoly(std::move(out), rel.weight - 2);
}

std::string to_string(const WeightedPoly& p) { return arith::to_string(p.poly()); }

}  // namespace lieperiod::period
