#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "lieperiod/arith/bernoulli.hpp"
#include "lieperiod/arith/polyq.hpp"
#include "lieperiod/arith/rational.hpp"
#include "oracles.hpp"

using namespace lieperiod;
using arith::fraction;

TEST_CASE("rational text round trip") {
  CHECK(arith::to_string(fraction(6, -4)) == "-3/2");
  CHECK(arith::to_string(fraction(8, 4)) == "2");
  CHECK(arith::parse_rational("-3/2") == fraction(-3, 2));
  CHECK(arith::parse_rational("12/8") == fraction(3, 2));
  CHECK(arith::parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(arith::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(arith::parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(arith::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(fraction(1, 0), std::domain_error);
}

TEST_CASE("binomial") {
  CHECK(arith::binomial(5, 2) == 10);
  CHECK(arith::binomial(4, -1) == 0);
  CHECK(arith::binomial(0, 0) == 1);
  CHECK(arith::binomial(3, 5) == 0);
  CHECK(arith::binomial(-2, 1) == 0);
}

TEST_CASE("binomial against Pascal's triangle") {
  for (long n = -50; n <= 50; ++n)
    for (long k = -50; k <= 50; ++k) {
      CHECK(Rational(arith::binomial(n, k)) == oracle::binom(n, k));
      if (n >= 1 && k >= 1)
        CHECK(arith::binomial(n, k) == arith::binomial(n - 1, k - 1) + arith::binomial(n - 1, k));
    }
}

TEST_CASE("factorial and common denominator") {
  CHECK(arith::factorial(0) == 1);
  CHECK(arith::factorial(10) == 3628800);
  CHECK_THROWS(arith::factorial(-1));
  std::vector<Rational> v{fraction(1, 4), fraction(5, 6), Rational(3)};
  CHECK(arith::common_denominator(v) == 12);
  CHECK(arith::common_denominator(std::span<const Rational>{}) == 1);
}

TEST_CASE("bernoulli numbers") {
  CHECK(arith::bernoulli_number(0) == 1);
  CHECK(arith::bernoulli_number(1) == fraction(-1, 2));
  CHECK(arith::bernoulli_number(-3) == 0);
  CHECK(arith::bernoulli_number(12) == fraction(-691, 2730));
  for (long n = 0; n <= 40; ++n) CHECK(arith::bernoulli_number(n) == oracle::bernoulli(n));
  for (long n = 3; n <= 41; n += 2) CHECK(arith::bernoulli_number(n) == 0);
}

TEST_CASE("bernoulli polynomials") {
  CHECK(arith::bernoulli_polynomial(0) == PolyQ{1});
  CHECK(arith::bernoulli_polynomial(1) == PolyQ{fraction(-1, 2), 1});
  CHECK(arith::bernoulli_polynomial(2) == PolyQ{fraction(1, 6), -1, 1});
  CHECK_THROWS(arith::bernoulli_polynomial(-1));

  for (int n = 0; n <= 30; ++n) {
    const PolyQ bn = arith::bernoulli_polynomial(n);
    const Rational b = arith::bernoulli_number(n);
    CHECK(bn(0) == b);
    CHECK(bn(1) == (n % 2 == 0 ? b : -b));
    CHECK(bn.coeffs() == PolyQ(oracle::bernoulli_poly(n)).coeffs());
  }
  for (int n = 1; n <= 30; ++n) {
    const PolyQ bn = arith::bernoulli_polynomial(n);
    PolyQ shifted;
    const PolyQ t_plus_1{1, 1};
    for (int k = 0; k <= n; ++k) shifted += bn.coeff(k) * t_plus_1.pow(k);
    CHECK(shifted - bn == PolyQ::monomial(n, n - 1));
  }
}

TEST_CASE("polynomial helpers") {
  const PolyQ p{1, 2, 0, 3};
  CHECK(p.degree() == 3);
  CHECK(PolyQ{}.degree() == PolyQ::zero_degree);
  CHECK(PolyQ{0, 0}.is_zero());
  CHECK(p(2) == 1 + 4 + 24);
  CHECK(p.reversed(5) == PolyQ{0, 0, 3, 0, 2, 1});
  CHECK_THROWS(p.reversed(2));
  CHECK(p.reflected() == PolyQ{1, -2, 0, -3});
  CHECK(PolyQ{1, 0, 2}.has_parity(true));
  CHECK_FALSE(p.has_parity(true));
  CHECK(PolyQ{0, 1, 0, 5}.has_parity(false));
  CHECK(PolyQ{1, 1} * PolyQ{-1, 1} == PolyQ{-1, 0, 1});
  CHECK(arith::to_string(PolyQ{fraction(1, 6), -1, 1}) == "1*t^2 - 1*t + 1/6");
  CHECK(arith::to_string(PolyQ{}) == "0");
}
