#include "lieperiod/ihara/identities.hpp"

#include "lieperiod/arith/bernoulli.hpp"
#include "lieperiod/arith/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lieperiod::ihara {

using arith::bernoulli_number;
using arith::binomial;

namespace {

Rational binom(long n, long k) { return Rational(binomial(n, k)); }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

PairRelation dptop2_family(int n, int p) {
  require(n >= 1 && p >= 1, "dptop2_family: n, p must be >= 1");
  PairRelation rel(n + p, PairKind::lie);
  for (int k = 1; k <= p - 1; ++k) rel.add(k, n + p - k, binom(n + p - 1 - k, p - k));
  return rel;
}

NCPoly d_phi_closed(int n, int p) { return evaluate(dptop2_family(n, p)); }

PairRelation ptof_family(int n, int p) {
  require(n >= 1 && p >= 1, "ptof_family: n, p must be >= 1");
  PairRelation rel(n + p, PairKind::lie);
  for (int k = 1; k <= std::max(n, p) - 1; ++k)
    rel.add(k, n + p - k, binom(n + p - 1 - k, n - k) - binom(n + p - 1 - k, p - k));
  return rel;
}

NCPoly ihara_bracket_closed(int n, int p) { return evaluate(ptof_family(n, p)); }

PairRelation dpcroch_family(int n, int p) {
  if (n < 2) throw std::domain_error("dpcroch_family: n must be >= 2 (the formula divides by n-1)");
  require(p >= 1, "dpcroch_family: p must be >= 1");
  PairRelation rel(n + p, PairKind::derivation);
  const Rational scale = arith::fraction(-1, n - 1);
  for (int i = 0; i <= p; ++i)
    rel.add(n - 1 + i, p + 1 - i, scale * binom(n - 2 + i, n - 2) * bernoulli_number(i));
  return rel;
}

NCPoly bracket_from_derivations(int n, int p, DerivationSign sign) {
  return evaluate(dpcroch_family(n, p), sign);
}

PairRelation ltop_family(int m, int k) {
  if (m < 2 || m % 2 != 0) throw std::domain_error("ltop_family: first index must be even and >= 2");
  require(k >= 2, "ltop_family: k must be >= 2");
  PairRelation rel(m + k, PairKind::ihara);
  for (int i = 0; i <= m; ++i)
    rel.add(m - i + 1, k + i - 1, binom(k - 1 + i, k - 1) * bernoulli_number(i) / Rational(k - 1 + i));
  return rel;
}

NCPoly bracket_from_ihara(int m, int k, DerivationSign sign) { return evaluate(ltop_family(m, k), sign); }

PairRelation relation_dpcroch1(int n) {
  require(n >= 2, "relation_dpcroch1: n must be >= 2");
  PairRelation rel(2 * n, PairKind::derivation);
  for (int i = 0; i <= n; ++i) rel.add(n - 1 + i, n + 1 - i, binom(n - 2 + i, n - 2) * bernoulli_number(i));
  return canonicalize(rel);
}

PairRelation relation_dpcroch2(int n, int p) {
  require(n >= 2 && p >= 2, "relation_dpcroch2: n, p must be >= 2");
  PairRelation rel(n + p, PairKind::derivation);
  for (int i = 1; i <= n + p - 1; ++i) {
    const Rational c = binom(i - 1, i - p + 1) * bernoulli_number(i - p + 1) / Rational(p - 1) +
                       binom(i - 1, i - n + 1) * bernoulli_number(i - n + 1) / Rational(n - 1);
    rel.add(i, n + p - i, c);
  }
  return canonicalize(rel);
}

PairRelation cor1_terms(int n) {
  require(n >= 1, "cor1_terms: n must be >= 1");
  PairRelation rel(4 * n, PairKind::ihara);
  for (int i = 0; i <= 2 * n; ++i)
    rel.add(2 * n - i + 1, 2 * n + i - 1, binom(2 * n - 2 + i, 2 * n - 2) * bernoulli_number(i));
  return rel;
}

PairRelation relation_cor1(int n) { return canonicalize(cor1_terms(n)); }

PairRelation cor2_terms(int n, int p) {
  require(n >= 1 && p >= 1, "cor2_terms: n, p must be >= 1");
  const int w = 2 * n + 2 * p;
  PairRelation rel(w, PairKind::ihara);
  for (int i = 1; i <= w - 1; ++i) {
    const Rational c = binom(i - 1, i - 2 * p + 1) * bernoulli_number(i - 2 * p + 1) / Rational(2 * p - 1) +
                       binom(i - 1, i - 2 * n + 1) * bernoulli_number(i - 2 * n + 1) / Rational(2 * n - 1);
    rel.add(w - i, i, c);
  }
  return rel;
}

PairRelation relation_cor2(int n, int p) { return canonicalize(cor2_terms(n, p)); }

}  // namespace lieperiod::ihara
