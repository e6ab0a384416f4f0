// Noncommutative polynomials over {a, b} with rational coefficients: the
// free associative algebra in which Lie elements are realized.
#pragma once

#include "lieperiod/arith/rational.hpp"
#include "lieperiod/freelie/word.hpp"

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <utility>

namespace lieperiod::freelie {

class NCPoly {
 public:
  using Terms = std::map<Word, Rational>;

  /// Returned by degree() for the zero polynomial and for mixed degrees.
  static constexpr std::size_t no_degree = std::numeric_limits<std::size_t>::max();

  NCPoly() = default;
  explicit NCPoly(Letter x);
  explicit NCPoly(const Word& w, const Rational& c = 1);
  NCPoly(std::initializer_list<std::pair<const char*, Rational>> terms);

  /// Parses the text form written by to_string, e.g. "1/2*aab - 1*aba".
  static NCPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coeff(const Word& w) const;
  /// Common word length, or no_degree.
  std::size_t degree() const;

  /// Adds c to the coefficient of w, erasing it if it cancels.
  void add_term(const Word& w, const Rational& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  /// this += c * o
  NCPoly& add_scaled(const NCPoly& o, const Rational& c);

  friend NCPoly operator+(NCPoly f, const NCPoly& g) { return f += g; }
  friend NCPoly operator-(NCPoly f, const NCPoly& g) { return f -= g; }
  friend NCPoly operator-(NCPoly f) { return f *= Rational(-1); }
  friend NCPoly operator*(NCPoly f, const Rational& c) { return f *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly f) { return f *= c; }
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  Terms terms_;
};

/// Bilinear extension of concatenation.
NCPoly concat_product(const NCPoly& f, const NCPoly& g);
inline NCPoly operator*(const NCPoly& f, const NCPoly& g) { return concat_product(f, g); }

/// Terms in word order as "coef*word" joined by " + " / " - "; "0" when empty.
std::string to_string(const NCPoly& f);

}  // namespace lieperiod::freelie

namespace lieperiod {
using freelie::Letter;
using freelie::NCPoly;
using freelie::Word;
}  // namespace lieperiod
