#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "revguard/errors.hpp"

namespace revguard {

inline constexpr int kMaxLines = 63;

// An assignment of boolean values to the n lines of a circuit.
// Bit i of the packed word is the value of line i. Textual form writes
// line 0 as the leftmost character.
class BitPattern {
 public:
  BitPattern(int width, std::uint64_t bits) : width_(width), bits_(bits) {
    if (width < 1 || width > kMaxLines)
      throw DimensionError("pattern width must be in 1..63, got " +
                           std::to_string(width));
    bits_ &= mask(width);
  }

  static BitPattern all_ones(int width) {
    return BitPattern(width, ~std::uint64_t{0});
  }

  static BitPattern one_cold(int width, int zero_line) {
    BitPattern p = all_ones(width);
    if (zero_line < 0 || zero_line >= width)
      throw DimensionError("one-cold line out of range");
    p.bits_ &= ~(std::uint64_t{1} << zero_line);
    return p;
  }

  // Leftmost character is line 0.
  static BitPattern parse(std::string_view s) {
    if (s.empty() || s.size() > kMaxLines)
      throw DimensionError("pattern string length must be in 1..63");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        bits |= std::uint64_t{1} << i;
      else if (s[i] != '0')
        throw DimensionError("pattern string must contain only 0/1");
    }
    return BitPattern(static_cast<int>(s.size()), bits);
  }

  int width() const noexcept { return width_; }
  std::uint64_t value() const noexcept { return bits_; }

  bool bit(int line) const {
    check_line(line);
    return (bits_ >> line) & 1u;
  }

  BitPattern flipped(int line) const {
    check_line(line);
    return BitPattern(width_, bits_ ^ (std::uint64_t{1} << line));
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
      if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  static std::uint64_t mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

  friend bool operator==(const BitPattern&, const BitPattern&) = default;

 private:
  void check_line(int line) const {
    if (line < 0 || line >= width_)
      throw DimensionError("line index " + std::to_string(line) +
                           " out of range for width " + std::to_string(width_));
  }

  int width_;
  std::uint64_t bits_;
};

}  // namespace revguard
