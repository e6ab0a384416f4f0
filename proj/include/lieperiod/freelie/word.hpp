// Words over the two-letter alphabet {a, b}.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace lieperiod::freelie {

enum class Letter : std::uint8_t { a = 0, b = 1 };

/// A word of length <= 64, packed most-significant-bit first (a = 0, b = 1).
/// With that packing the defaulted ordering is lexicographic with a < b and
/// a proper prefix sorting before its extensions.
class Word {
 public:
  static constexpr std::size_t max_length = 64;

  Word() = default;
  explicit Word(Letter x);
  /// Throws std::invalid_argument on letters other than 'a'/'b' or overlong input.
  static Word parse(std::string_view letters);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Letter operator[](std::size_t k) const {
    return static_cast<Letter>((bits_ >> (63 - k)) & 1u);
  }

  /// First k letters.
  Word prefix(std::size_t k) const;
  /// Letters from position k to the end.
  Word suffix(std::size_t k) const;

  friend Word operator+(const Word& u, const Word& v);

  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word(std::uint64_t bits, std::uint8_t size) : bits_(bits), size_(size) {}

  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

}  // namespace lieperiod::freelie
