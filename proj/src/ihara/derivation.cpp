#include "lieperiod/ihara/derivation.hpp"

#include "lieperiod/freelie/freelie.hpp"

#include <stdexcept>

namespace lieperiod::ihara {

NCPoly special_derivation(const NCPoly& f, const NCPoly& v, DerivationSign sign) {
  if (f.is_zero()) return {};
  const std::size_t d = f.degree();
  if (d == NCPoly::no_degree || d == 0)
    throw std::invalid_argument("special_derivation: f must be homogeneous of degree >= 1");

  const NCPoly a(Letter::a);
  const NCPoly image_of_a =
      sign == DerivationSign::f_then_a ? freelie::lie_bracket(f, a) : freelie::lie_bracket(a, f);

  NCPoly out;
  for (const auto& [w, c] : v.terms()) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != Letter::a) continue;
      const Word head = w.prefix(k);
      const Word tail = w.suffix(k + 1);
      for (const auto& [u, x] : image_of_a.terms()) out.add_term(head + u + tail, c * x);
    }
  }
  return out;
}

NCPoly ihara_bracket(const NCPoly& f, const NCPoly& g, DerivationSign sign) {
  NCPoly out = freelie::lie_bracket(f, g);
  out += special_derivation(g, f, sign);
  out -= special_derivation(f, g, sign);
  return out;
}

}  // namespace lieperiod::ihara
