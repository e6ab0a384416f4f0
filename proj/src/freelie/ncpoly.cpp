#include "lieperiod/freelie/ncpoly.hpp"

#include <stdexcept>

namespace lieperiod::freelie {

NCPoly::NCPoly(Letter x) { terms_.emplace(Word(x), 1); }

NCPoly::NCPoly(const Word& w, const Rational& c) {
  if (c != 0) terms_.emplace(w, c);
}

NCPoly::NCPoly(std::initializer_list<std::pair<const char*, Rational>> terms) {
  for (const auto& [w, c] : terms) add_term(Word::parse(w), c);
}

Rational NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t NCPoly::degree() const {
  if (terms_.empty()) return no_degree;
  const std::size_t d = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_)
    if (w.size() != d) return no_degree;
  return d;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly& NCPoly::add_scaled(const NCPoly& o, const Rational& c) {
  if (c == 0) return *this;
  for (const auto& [w, x] : o.terms_) add_term(w, c * x);
  return *this;
}

NCPoly concat_product(const NCPoly& f, const NCPoly& g) {
  NCPoly out;
  for (const auto& [u, x] : f.terms())
    for (const auto& [v, y] : g.terms()) out.add_term(u + v, x * y);
  return out;
}

std::string to_string(const NCPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : f.terms()) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += arith::to_string(Rational(abs(c)));
    out += '*';
    out += w.str();
  }
  return out;
}

NCPoly NCPoly::parse(std::string_view text) {
  NCPoly out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "0") return out;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  while (!text.empty()) {
    std::size_t next = text.size();
    bool next_negative = false;
    for (std::size_t k = 0; k + 2 < text.size(); ++k) {
      if (text[k] == ' ' && (text[k + 1] == '+' || text[k + 1] == '-') && text[k + 2] == ' ') {
        next = k;
        next_negative = text[k + 1] == '-';
        break;
      }
    }
    const auto term = trim(text.substr(0, next));
    const auto star = term.find('*');
    if (star == std::string_view::npos) throw std::invalid_argument("NCPoly::parse: term without '*'");
    Rational c = arith::parse_rational(term.substr(0, star));
    out.add_term(Word::parse(term.substr(star + 1)), negative ? Rational(-c) : c);
    negative = next_negative;
    text = next == text.size() ? std::string_view{} : text.substr(next + 3);
  }
  return out;
}

}  // namespace lieperiod::freelie
