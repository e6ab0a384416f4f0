#include "lieperiod/arith/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lieperiod::arith {

namespace {

// b_0..b_{n-1} from sum_{k=0}^{n} C(n+1, k) b_k = 0 (n >= 1).
class BernoulliTable {
 public:
  Rational get(long n) {
    std::lock_guard lock(mutex_);
    while (static_cast<long>(values_.size()) <= n) extend();
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  void extend() {
    const long n = static_cast<long>(values_.size());
    if (n == 0) {
      values_.emplace_back(1);
      return;
    }
    if (n >= 3 && n % 2 == 1) {
      values_.emplace_back(0);
      return;
    }
    Rational acc = 0;
    for (long k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * values_[static_cast<std::size_t>(k)];
    values_.push_back(-acc / Rational(n + 1));
  }

  std::mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

Rational bernoulli_number(long n) {
  if (n < 0) return 0;
  return table().get(n);
}

PolyQ bernoulli_polynomial(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli_polynomial: negative index");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) c[static_cast<std::size_t>(n - i)] = Rational(binomial(n, i)) * bernoulli_number(i);
  return PolyQ(std::move(c));
}

}  // namespace lieperiod::arith
