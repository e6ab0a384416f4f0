// Truncated bivariate generating series with coefficients in the free
// associative algebra, and coefficientwise checks of the series identities
// built from Phi(x) = sum_{n>=1} phi_n x^{n-1}.
#pragma once

#include "lieperiod/freelie/ncpoly.hpp"
#include "lieperiod/ihara/derivation.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

namespace lieperiod::ihara {

/// sum c_ij x^i y^j with every term of total degree i + j > order discarded.
class BiSeries {
 public:
  using Key = std::pair<int, int>;
  using Product = std::function<NCPoly(const NCPoly&, const NCPoly&)>;

  explicit BiSeries(int order) : order_(order) {}

  int order() const { return order_; }
  const std::map<Key, NCPoly>& coeffs() const { return coeffs_; }
  NCPoly coeff(int i, int j) const;
  void add(int i, int j, const NCPoly& c);

  /// Phi(x), Phi(y) and Phi(x + y).
  static BiSeries phi_x(int order);
  static BiSeries phi_y(int order);
  static BiSeries phi_x_plus_y(int order);

  /// sum op(A_ij, B_kl) x^{i+k} y^{j+l}, for any bilinear op.
  static BiSeries combine(const BiSeries& lhs, const BiSeries& rhs, const Product& op);

  /// S(x + y, y)
  BiSeries shift_x_by_y() const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

  /// First (i, j), in key order, where the coefficients differ.
  static std::optional<Key> first_difference(const BiSeries& a, const BiSeries& b);

 private:
  int order_;
  std::map<Key, NCPoly> coeffs_;
};

enum class SeriesIdentity {
  sdphi,  // D_{Phi(x)} Phi(y) = [Phi(x), Phi(y)] + [Phi(y), Phi(x+y)]
  ihlie,  // {Phi(x), Phi(y)} = [Phi(y), Phi(x)] + [Phi(x) - Phi(y), Phi(x+y)]
  f2g,    // F(x, y) = G(x, y) - G(x+y, y), F_ij = D_{phi_i}(phi_j), G_ij = [phi_i, phi_j]
};

std::string_view to_string(SeriesIdentity which);
std::optional<SeriesIdentity> parse_series_identity(std::string_view name);

/// Coefficient of x^i y^j where the two sides first disagree, if any, over
/// all bidegrees with i + j <= order.
std::optional<BiSeries::Key> series_mismatch(SeriesIdentity which, int order,
                                             DerivationSign sign = DerivationSign::f_then_a);

/// True iff both sides agree through total degree `order` (>= 2; throws
/// std::invalid_argument otherwise).
bool verify_series_identity(SeriesIdentity which, int order,
                            DerivationSign sign = DerivationSign::f_then_a);

}  // namespace lieperiod::ihara
