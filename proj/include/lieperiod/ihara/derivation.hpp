// Special derivations D_f and the Ihara bracket.
#pragma once

#include "lieperiod/freelie/ncpoly.hpp"

namespace lieperiod::ihara {

/// Which bracket D_f sends the letter a to. D_f(b) = 0 either way.
///
/// f_then_a gives D_f(a) = [f, a], so that D_{phi_n}(a) = -n phi_{n+1}; the
/// expansions of D_{phi_n}(phi_p) and {phi_n, phi_p} in classical brackets
/// hold in this convention. a_then_f is the literal D_f(v) = [pi(v), f] with
/// commutator brackets; it negates every D value and exists so the
/// convention can be shown to matter.
enum class DerivationSign { f_then_a, a_then_f };

/// The derivation with D_f(a) as selected, D_f(b) = 0, extended to words by
/// the Leibniz rule D(uw) = D(u) w + u D(w). Requires f homogeneous of degree
/// >= 1 (or zero); throws std::invalid_argument otherwise.
NCPoly special_derivation(const NCPoly& f, const NCPoly& v,
                          DerivationSign sign = DerivationSign::f_then_a);

/// {f, g} = [f, g] + D_g(f) - D_f(g)
NCPoly ihara_bracket(const NCPoly& f, const NCPoly& g,
                     DerivationSign sign = DerivationSign::f_then_a);

}  // namespace lieperiod::ihara
