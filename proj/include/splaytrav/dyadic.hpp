#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace splaytrav {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

/// Exact value numerator / 2^exponent.
///
/// Arithmetic never rounds. Values are not normalized: 2/4 and 1/2 compare
/// equal but keep their own exponents, so a decimal expansion has exactly
/// exponent() fractional digits before trailing zeros are trimmed.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, std::uint64_t exponent)
      : numerator_(std::move(numerator)), exponent_(exponent) {}

  /// numerator * 2^{-exponent} for a possibly negative exponent; a negative
  /// exponent is folded into the numerator.
  static DyadicRational from_pow2(BigInt numerator, std::int64_t exponent);

  const BigInt& numerator() const { return numerator_; }
  std::uint64_t exponent() const { return exponent_; }

  /// Same value written over 2^exponent; exponent must not be smaller than
  /// the current one.
  DyadicRational with_exponent(std::uint64_t exponent) const;

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);
  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  BigInt numerator_ = 0;
  std::uint64_t exponent_ = 0;
};

/// Exact decimal expansion truncated (never rounded) to at most max_places
/// fractional digits. Trailing fractional zeros are trimmed, and the point
/// is omitted when no fractional digits remain. Requires v >= 0.
std::string decimal_expansion(const DyadicRational& v, std::uint64_t max_places);

/// Untrimmed expansion: integer part, "." and exactly min(exponent,
/// max_places) fractional digits.
std::string decimal_expansion_fixed(const DyadicRational& v, std::uint64_t max_places);

}  // namespace splaytrav
