#include "lieperiod/freelie/freelie.hpp"

#include "lieperiod/arith/rational.hpp"

#include <stdexcept>

namespace lieperiod::freelie {

NCPoly lie_bracket(const NCPoly& f, const NCPoly& g) {
  NCPoly out = f * g;
  for (const auto& [v, y] : g.terms())
    for (const auto& [u, x] : f.terms()) out.add_term(v + u, -(x * y));
  return out;
}

NCPoly ad_power(Letter x, int m, const NCPoly& f) {
  if (m < 0) throw std::invalid_argument("ad_power: negative exponent");
  const NCPoly gen(x);
  NCPoly out = f;
  for (int k = 0; k < m; ++k) out = lie_bracket(gen, out);
  return out;
}

NCPoly phi(int n) {
  if (n < 1) throw std::invalid_argument("phi: index must be >= 1");
  const Integer fact = arith::factorial(n - 1);
  const Word a(Letter::a);
  const Word b(Letter::b);
  NCPoly out;
  for (int j = 0; j < n; ++j) {
    Word w;
    for (int k = 0; k < n - 1 - j; ++k) w = w + a;
    w = w + b;
    for (int k = 0; k < j; ++k) w = w + a;
    Rational c = arith::fraction(arith::binomial(n - 1, j), fact);
    out.add_term(w, j % 2 ? Rational(-c) : c);
  }
  return out;
}

NCPoly dynkin_map(const NCPoly& f) {
  NCPoly out;
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) {
      out.add_term(w, c);
      continue;
    }
    NCPoly acc(w.prefix(1));
    for (std::size_t k = 1; k < w.size(); ++k) acc = lie_bracket(acc, NCPoly(Word(w[k])));
    out.add_scaled(acc, c);
  }
  return out;
}

bool is_lie_element(const NCPoly& f) {
  if (f.is_zero()) return true;
  const std::size_t d = f.degree();
  if (d == NCPoly::no_degree) throw std::invalid_argument("is_lie_element: mixed degrees");
  if (d == 0) return false;
  return dynkin_map(f) == f * Rational(static_cast<long>(d));
}

}  // namespace lieperiod::freelie
