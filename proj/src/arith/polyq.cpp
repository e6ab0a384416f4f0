#include "lieperiod/arith/polyq.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieperiod::arith {

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("PolyQ::monomial: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational PolyQ::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

PolyQ PolyQ::reversed(int w) const {
  if (degree() > w) throw std::invalid_argument("PolyQ::reversed: degree exceeds w");
  std::vector<Rational> v(static_cast<std::size_t>(w) + 1);
  for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(w - k)] = coeffs_[static_cast<std::size_t>(k)];
  return PolyQ(std::move(v));
}

PolyQ PolyQ::reflected() const {
  auto v = coeffs_;
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return PolyQ(std::move(v));
}

bool PolyQ::has_parity(bool even) const {
  for (std::size_t k = even ? 1 : 0; k < coeffs_.size(); k += 2)
    if (coeffs_[k] != 0) return false;
  return true;
}

PolyQ PolyQ::pow(unsigned e) const {
  PolyQ result = constant(1);
  PolyQ base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyQ(std::move(v));
}

std::string to_string(const PolyQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += to_string(Rational(abs(c)));
    if (k == 1) out += "*t";
    else if (k > 1) out += "*t^" + std::to_string(k);
  }
  return out;
}

}  // namespace lieperiod::arith
