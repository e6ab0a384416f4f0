#include "lieperiod/freelie/word.hpp"

#include <stdexcept>

namespace lieperiod::freelie {

namespace {

std::uint64_t top_mask(std::size_t k) { return k == 0 ? 0 : ~std::uint64_t{0} << (64 - k); }

}  // namespace

Word::Word(Letter x) : bits_(static_cast<std::uint64_t>(x) << 63), size_(1) {}

Word Word::parse(std::string_view letters) {
  if (letters.size() > max_length) throw std::invalid_argument("Word: longer than 64 letters");
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const char c = letters[k];
    if (c == 'b') bits |= std::uint64_t{1} << (63 - k);
    else if (c != 'a') throw std::invalid_argument("Word: letter outside {a,b}: " + std::string(letters));
  }
  return Word(bits, static_cast<std::uint8_t>(letters.size()));
}

Word Word::prefix(std::size_t k) const {
  if (k >= size_) return *this;
  return Word(bits_ & top_mask(k), static_cast<std::uint8_t>(k));
}

Word Word::suffix(std::size_t k) const {
  if (k >= size_) return Word();
  return Word(bits_ << k, static_cast<std::uint8_t>(size_ - k));
}

Word operator+(const Word& u, const Word& v) {
  if (u.size_ + v.size_ > Word::max_length) throw std::length_error("Word: concatenation longer than 64 letters");
  if (u.size_ == 0) return v;
  if (v.size_ == 0) return u;
  return Word(u.bits_ | (v.bits_ >> u.size_), static_cast<std::uint8_t>(u.size_ + v.size_));
}

std::string Word::str() const {
  std::string s(size_, 'a');
  for (std::size_t k = 0; k < size_; ++k)
    if ((*this)[k] == Letter::b) s[k] = 'b';
  return s;
}

}  // namespace lieperiod::freelie
