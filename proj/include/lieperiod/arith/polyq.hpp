// Dense univariate polynomials in t over the rationals.
#pragma once

#include "lieperiod/arith/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lieperiod::arith {

class PolyQ {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int zero_degree = -1;

  PolyQ() = default;
  /// Coefficients indexed by degree; trailing zeros are trimmed.
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(std::initializer_list<Rational> coeffs);

  static PolyQ constant(const Rational& c);
  /// c * t^k
  static PolyQ monomial(const Rational& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^k; zero outside the stored range.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;

  /// t^w * P(1/t). Requires degree() <= w.
  PolyQ reversed(int w) const;
  /// P(-t)
  PolyQ reflected() const;
  /// even: only even powers of t occur; otherwise only odd powers occur.
  bool has_parity(bool even) const;

  PolyQ pow(unsigned e) const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator-(PolyQ a) { return a *= Rational(-1); }
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Descending-degree text, e.g. "1*t^2 - 1*t + 1/6"; "0" for the zero polynomial.
std::string to_string(const PolyQ& p);

}  // namespace lieperiod::arith

namespace lieperiod {
using arith::PolyQ;
}  // namespace lieperiod
