#include "lieperiod/ihara/series.hpp"

#include "lieperiod/arith/rational.hpp"
#include "lieperiod/freelie/freelie.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieperiod::ihara {

NCPoly BiSeries::coeff(int i, int j) const {
  auto it = coeffs_.find(Key{i, j});
  return it == coeffs_.end() ? NCPoly{} : it->second;
}

void BiSeries::add(int i, int j, const NCPoly& c) {
  if (i < 0 || j < 0 || i + j > order_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(Key{i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

BiSeries BiSeries::phi_x(int order) {
  BiSeries s(order);
  for (int n = 1; n - 1 <= order; ++n) s.add(n - 1, 0, freelie::phi(n));
  return s;
}

BiSeries BiSeries::phi_y(int order) {
  BiSeries s(order);
  for (int n = 1; n - 1 <= order; ++n) s.add(0, n - 1, freelie::phi(n));
  return s;
}

BiSeries BiSeries::phi_x_plus_y(int order) {
  BiSeries s(order);
  for (int n = 1; n - 1 <= order; ++n) {
    const NCPoly g = freelie::phi(n);
    for (int j = 0; j <= n - 1; ++j) s.add(j, n - 1 - j, g * Rational(arith::binomial(n - 1, j)));
  }
  return s;
}

BiSeries BiSeries::combine(const BiSeries& lhs, const BiSeries& rhs, const Product& op) {
  BiSeries out(std::min(lhs.order_, rhs.order_));
  for (const auto& [k1, f] : lhs.coeffs_)
    for (const auto& [k2, g] : rhs.coeffs_) {
      const int i = k1.first + k2.first;
      const int j = k1.second + k2.second;
      if (i + j > out.order_) continue;
      out.add(i, j, op(f, g));
    }
  return out;
}

BiSeries BiSeries::shift_x_by_y() const {
  // x^i y^j -> (x + y)^i y^j = sum_a C(i, a) x^a y^{i-a+j}
  BiSeries out(order_);
  for (const auto& [key, c] : coeffs_) {
    const auto [i, j] = key;
    for (int a = 0; a <= i; ++a) out.add(a, i - a + j, c * Rational(arith::binomial(i, a)));
  }
  return out;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  for (const auto& [key, c] : o.coeffs_) add(key.first, key.second, c);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  for (const auto& [key, c] : o.coeffs_) add(key.first, key.second, -c);
  return *this;
}

std::optional<BiSeries::Key> BiSeries::first_difference(const BiSeries& a, const BiSeries& b) {
  const BiSeries diff = a - b;
  if (diff.coeffs_.empty()) return std::nullopt;
  return diff.coeffs_.begin()->first;
}

std::string_view to_string(SeriesIdentity which) {
  switch (which) {
    case SeriesIdentity::sdphi: return "sdphi";
    case SeriesIdentity::ihlie: return "ihlie";
    case SeriesIdentity::f2g: return "f2g";
  }
  return "?";
}

std::optional<SeriesIdentity> parse_series_identity(std::string_view name) {
  if (name == "sdphi") return SeriesIdentity::sdphi;
  if (name == "ihlie") return SeriesIdentity::ihlie;
  if (name == "f2g") return SeriesIdentity::f2g;
  return std::nullopt;
}

std::optional<BiSeries::Key> series_mismatch(SeriesIdentity which, int order, DerivationSign sign) {
  if (order < 2) throw std::invalid_argument("series identity: truncation order must be >= 2");

  const auto lie = [](const NCPoly& f, const NCPoly& g) { return freelie::lie_bracket(f, g); };
  const auto der = [sign](const NCPoly& f, const NCPoly& g) { return special_derivation(f, g, sign); };
  const auto ihb = [sign](const NCPoly& f, const NCPoly& g) { return ihara_bracket(f, g, sign); };

  const BiSeries px = BiSeries::phi_x(order);
  const BiSeries py = BiSeries::phi_y(order);

  switch (which) {
    case SeriesIdentity::sdphi: {
      const BiSeries pxy = BiSeries::phi_x_plus_y(order);
      const BiSeries lhs = BiSeries::combine(px, py, der);
      const BiSeries rhs = BiSeries::combine(px, py, lie) + BiSeries::combine(py, pxy, lie);
      return BiSeries::first_difference(lhs, rhs);
    }
    case SeriesIdentity::ihlie: {
      const BiSeries pxy = BiSeries::phi_x_plus_y(order);
      const BiSeries lhs = BiSeries::combine(px, py, ihb);
      const BiSeries rhs = BiSeries::combine(py, px, lie) + BiSeries::combine(px - py, pxy, lie);
      return BiSeries::first_difference(lhs, rhs);
    }
    case SeriesIdentity::f2g: {
      const BiSeries f = BiSeries::combine(px, py, der);
      const BiSeries g = BiSeries::combine(px, py, lie);
      return BiSeries::first_difference(f, g - g.shift_x_by_y());
    }
  }
  return std::nullopt;
}

bool verify_series_identity(SeriesIdentity which, int order, DerivationSign sign) {
  return !series_mismatch(which, order, sign).has_value();
}

}  // namespace lieperiod::ihara
