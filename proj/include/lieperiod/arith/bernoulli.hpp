// Bernoulli numbers and polynomials with b_1 = -1/2, i.e.
//   u / (e^u - 1) = sum_n b_n u^n / n!,
//   B_n(t)        = sum_{i=0}^{n} C(n, i) b_i t^{n-i}.
#pragma once

#include "lieperiod/arith/polyq.hpp"
#include "lieperiod/arith/rational.hpp"

namespace lieperiod::arith {

/// b_n; zero for n < 0 so shifted-index sums need no special cases.
/// Values are memoized process-wide; safe to call concurrently.
Rational bernoulli_number(long n);

/// B_n(t), degree exactly n. Throws std::invalid_argument for n < 0.
PolyQ bernoulli_polynomial(long n);

}  // namespace lieperiod::arith
