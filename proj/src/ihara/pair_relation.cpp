#include "lieperiod/ihara/pair_relation.hpp"

#include "lieperiod/freelie/freelie.hpp"

#include <stdexcept>
#include <vector>

namespace lieperiod::ihara {

std::string_view to_string(PairKind kind) {
  switch (kind) {
    case PairKind::ihara: return "ihara";
    case PairKind::lie: return "lie";
    case PairKind::derivation: return "derivation";
  }
  return "?";
}

std::optional<PairKind> parse_pair_kind(std::string_view name) {
  if (name == "ihara") return PairKind::ihara;
  if (name == "lie") return PairKind::lie;
  if (name == "derivation") return PairKind::derivation;
  return std::nullopt;
}

void PairRelation::add(int i, int j, const Rational& c) {
  if (i < 1 || j < 1 || i + j != weight)
    throw std::invalid_argument("PairRelation: pair (" + std::to_string(i) + "," + std::to_string(j) +
                                ") does not have weight " + std::to_string(weight));
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(Key{i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

Rational PairRelation::coeff(int i, int j) const {
  auto it = coeffs.find(Key{i, j});
  return it == coeffs.end() ? Rational(0) : it->second;
}

namespace {

void integer_normalize(std::map<PairRelation::Key, Rational>& coeffs) {
  if (coeffs.empty()) return;
  std::vector<Rational> values;
  values.reserve(coeffs.size());
  for (const auto& [k, c] : coeffs) values.push_back(c);
  const Integer den = arith::common_denominator(values);
  Integer g = 0;
  for (const auto& c : values) {
    const Integer num = Rational(c * den).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale = arith::fraction(den, g);
  if (coeffs.rbegin()->second < 0) scale = -scale;
  for (auto& [k, c] : coeffs) c *= scale;
}

}  // namespace

PairRelation canonicalize(const PairRelation& rel) {
  PairRelation out(rel.weight, rel.kind);
  for (const auto& [key, c] : rel.coeffs) {
    auto [i, j] = key;
    if (rel.kind == PairKind::derivation) {
      if (j != 1) out.add(i, j, c);
      continue;
    }
    if (i == j) continue;
    Rational value = c;
    if (i > j) {
      std::swap(i, j);
      value = -value;
    }
    if (rel.kind == PairKind::ihara && i == 1) continue;
    out.add(i, j, value);
  }
  if (out.kind != PairKind::derivation) integer_normalize(out.coeffs);
  return out;
}

bool is_canonical(const PairRelation& rel) { return canonicalize(rel) == rel; }

NCPoly evaluate(const PairRelation& rel, DerivationSign sign) {
  NCPoly out;
  for (const auto& [key, c] : rel.coeffs) {
    const NCPoly f = freelie::phi(key.first);
    const NCPoly g = freelie::phi(key.second);
    switch (rel.kind) {
      case PairKind::ihara: out.add_scaled(ihara_bracket(f, g, sign), c); break;
      case PairKind::lie: out.add_scaled(freelie::lie_bracket(f, g), c); break;
      case PairKind::derivation: out.add_scaled(special_derivation(f, g, sign), c); break;
    }
  }
  return out;
}

bool annihilates(const PairRelation& rel, DerivationSign sign) { return evaluate(rel, sign).is_zero(); }

bool proportional(const PairRelation& a, const PairRelation& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  if (a.coeffs.empty()) return true;
  std::optional<Rational> ratio;
  for (auto ia = a.coeffs.begin(), ib = b.coeffs.begin(); ia != a.coeffs.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    const Rational r = ia->second / ib->second;
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return true;
}

std::string to_string(const PairRelation& rel) {
  if (rel.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : rel.coeffs) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += arith::to_string(Rational(abs(c)));
    const std::string ij = std::to_string(key.first) + "," + std::to_string(key.second);
    switch (rel.kind) {
      case PairKind::ihara: out += "*{" + ij + "}"; break;
      case PairKind::lie: out += "*[" + ij + "]"; break;
      case PairKind::derivation: out += "*D(" + ij + ")"; break;
    }
  }
  return out;
}

}  // namespace lieperiod::ihara
