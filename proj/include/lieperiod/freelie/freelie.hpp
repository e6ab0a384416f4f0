// Lie brackets, adjoint powers and the generators phi_n of the free Lie
// algebra on {a, b}, realized inside the free associative algebra.
#pragma once

#include "lieperiod/freelie/ncpoly.hpp"

namespace lieperiod::freelie {

/// [f, g] = fg - gf
NCPoly lie_bracket(const NCPoly& f, const NCPoly& g);

/// ad_x^m(f) = [x, [x, ..., [x, f]...]]
NCPoly ad_power(Letter x, int m, const NCPoly& f);

/// phi_n = ad_a^{n-1}(b) / (n-1)!, built directly from its n monomials:
/// the coefficient of a^{n-1-j} b a^j is (-1)^j C(n-1, j) / (n-1)!.
/// Throws std::invalid_argument for n < 1.
NCPoly phi(int n);

/// Left-normed bracketing of each word: a1 a2 ... ad -> [..[[a1,a2],a3]..,ad].
NCPoly dynkin_map(const NCPoly& f);

/// Dynkin-Specht-Wever test: a homogeneous f of degree d is a Lie element iff
/// dynkin_map(f) == d * f. The zero polynomial is a Lie element; mixed
/// degrees throw std::invalid_argument.
bool is_lie_element(const NCPoly& f);

}  // namespace lieperiod::freelie
