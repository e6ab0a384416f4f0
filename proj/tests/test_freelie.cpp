#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lieperiod/arith/rational.hpp"
#include "lieperiod/freelie/freelie.hpp"
#include "oracles.hpp"

using namespace lieperiod;
using namespace lieperiod::freelie;
using arith::fraction;

namespace {

NCPoly random_nc(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree), terms(1, 4);
  return oracle::to_nc(oracle::random_poly(rng, deg(rng), terms(rng)));
}

}  // namespace

TEST_CASE("words") {
  const Word w = Word::parse("abba");
  CHECK(w.size() == 4);
  CHECK(w[0] == Letter::a);
  CHECK(w[1] == Letter::b);
  CHECK(w.prefix(2).str() == "ab");
  CHECK(w.suffix(1).str() == "bba");
  CHECK((Word::parse("ab") + Word::parse("ba")).str() == "abba");
  CHECK((Word{} + w) == w);
  CHECK((w + Word{}) == w);
  CHECK(Word::parse("a") < Word::parse("aa"));
  CHECK(Word::parse("aab") < Word::parse("ab"));
  CHECK(Word::parse("ab") < Word::parse("b"));
  CHECK_THROWS(Word::parse("abc"));
  std::string long_word(40, 'a');
  CHECK_THROWS_AS(Word::parse(long_word) + Word::parse(long_word), std::length_error);
}

TEST_CASE("ncpoly text form") {
  const NCPoly f{{"aab", fraction(1, 2)}, {"aba", -1}};
  CHECK(to_string(f) == "1/2*aab - 1*aba");
  CHECK(NCPoly::parse(to_string(f)) == f);
  CHECK(to_string(NCPoly{}) == "0");
  CHECK(NCPoly::parse("0").is_zero());
  CHECK(f.degree() == 3);
  CHECK(NCPoly{}.degree() == NCPoly::no_degree);
  NCPoly g = f;
  g.add_term(Word::parse("aab"), fraction(-1, 2));
  CHECK(g == NCPoly{{"aba", -1}});
}

TEST_CASE("concatenation product") {
  const NCPoly a(Letter::a), b(Letter::b);
  CHECK(a * b == NCPoly{{"ab", 1}});
  CHECK((NCPoly{{"ab", 1}, {"ba", -1}}) * a == (NCPoly{{"aba", 1}, {"baa", -1}}));
  CHECK((NCPoly{} * a).is_zero());
}

TEST_CASE("lie bracket examples") {
  const NCPoly a(Letter::a), b(Letter::b);
  CHECK(lie_bracket(a, b) == (NCPoly{{"ab", 1}, {"ba", -1}}));
  const NCPoly f{{"ab", 3}, {"bba", -2}};
  CHECK(lie_bracket(f, f).is_zero());
  CHECK(lie_bracket(b, lie_bracket(a, b)) == (NCPoly{{"bab", 2}, {"bba", -1}, {"abb", -1}}));
}

TEST_CASE("ad powers and phi") {
  const NCPoly b(Letter::b);
  CHECK(ad_power(Letter::a, 0, b) == b);
  CHECK(ad_power(Letter::a, 1, b) == (NCPoly{{"ab", 1}, {"ba", -1}}));
  CHECK(ad_power(Letter::a, 2, b) == (NCPoly{{"aab", 1}, {"aba", -2}, {"baa", 1}}));
  CHECK_THROWS(ad_power(Letter::a, -1, b));

  CHECK(phi(1) == b);
  CHECK(phi(2) == (NCPoly{{"ab", 1}, {"ba", -1}}));
  CHECK(phi(3) == (NCPoly{{"aab", fraction(1, 2)}, {"aba", -1}, {"baa", fraction(1, 2)}}));
  CHECK_THROWS(phi(0));

  for (int n = 1; n <= 12; ++n) {
    const NCPoly p = phi(n);
    CHECK(p == oracle::to_nc(oracle::phi(n)));
    CHECK(p.size() == static_cast<std::size_t>(n));
    CHECK(p.degree() == static_cast<std::size_t>(n));
    CHECK(is_lie_element(p));
    CHECK(ad_power(Letter::a, n - 1, b) == Rational(arith::factorial(n - 1)) * p);
  }
}

TEST_CASE("lie membership") {
  CHECK(is_lie_element(NCPoly{{"ab", 1}, {"ba", -1}}));
  CHECK_FALSE(is_lie_element(NCPoly{{"ab", 1}}));
  CHECK(is_lie_element(phi(5)));
  CHECK(is_lie_element(NCPoly{}));
  CHECK_FALSE(is_lie_element(NCPoly{{"aa", 1}}));
  CHECK(is_lie_element(lie_bracket(phi(2), lie_bracket(phi(3), NCPoly(Letter::a)))));
  CHECK_THROWS_AS(is_lie_element(NCPoly{{"a", 1}, {"ab", 1}}), std::invalid_argument);
  CHECK(dynkin_map(NCPoly{{"ab", 1}}) == (NCPoly{{"ab", 1}, {"ba", -1}}));
}

TEST_CASE("lie bracket is bilinear, alternating and satisfies Jacobi") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const NCPoly f = random_nc(rng, 2), g = random_nc(rng, 2), h = random_nc(rng, 2);
    const Rational s = coef(rng), t = coef(rng);
    CHECK(lie_bracket(s * f + t * g, h) == s * lie_bracket(f, h) + t * lie_bracket(g, h));
    CHECK(lie_bracket(h, s * f + t * g) == s * lie_bracket(h, f) + t * lie_bracket(h, g));
    CHECK(lie_bracket(f + g, f + g).is_zero());
    CHECK(lie_bracket(f, g) == -lie_bracket(g, f));
    const NCPoly jac = lie_bracket(f, lie_bracket(g, h)) + lie_bracket(g, lie_bracket(h, f)) +
                       lie_bracket(h, lie_bracket(f, g));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("bracket degree is additive on homogeneous inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> deg(1, 3);
    const int d1 = deg(rng), d2 = deg(rng);
    const NCPoly f = oracle::to_nc(oracle::random_poly(rng, d1, 3));
    const NCPoly g = oracle::to_nc(oracle::random_poly(rng, d2, 3));
    const NCPoly h = lie_bracket(f, g);
    if (!h.is_zero()) CHECK(h.degree() == static_cast<std::size_t>(d1 + d2));
    CHECK(h == oracle::to_nc(oracle::br(oracle::from_nc(f), oracle::from_nc(g))));
  }
}
