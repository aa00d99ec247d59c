#include "splaytrav/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace splaytrav {

DyadicRational DyadicRational::from_pow2(BigInt numerator, std::int64_t exponent) {
  if (exponent >= 0) return {std::move(numerator), static_cast<std::uint64_t>(exponent)};
  BigInt scaled = numerator << static_cast<mp_bitcnt_t>(-exponent);
  return {std::move(scaled), 0};
}

DyadicRational DyadicRational::with_exponent(std::uint64_t exponent) const {
  if (exponent < exponent_) throw std::invalid_argument("cannot lower a dyadic exponent exactly");
  BigInt scaled = numerator_ << static_cast<mp_bitcnt_t>(exponent - exponent_);
  return {std::move(scaled), exponent};
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  const auto e = std::max(a.exponent_, b.exponent_);
  BigInt sum = a.with_exponent(e).numerator_ + b.with_exponent(e).numerator_;
  return {std::move(sum), e};
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  const auto e = std::max(a.exponent_, b.exponent_);
  BigInt diff = a.with_exponent(e).numerator_ - b.with_exponent(e).numerator_;
  return {std::move(diff), e};
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  const auto e = std::max(a.exponent_, b.exponent_);
  const int c = cmp(a.with_exponent(e).numerator_, b.with_exponent(e).numerator_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string decimal_expansion_fixed(const DyadicRational& v, std::uint64_t max_places) {
  if (sgn(v.numerator()) < 0) throw std::domain_error("decimal expansion of a negative value");
  // p / 2^q = p * 5^q / 10^q
  const std::uint64_t q = v.exponent();
  BigInt five_pow;
  mpz_ui_pow_ui(five_pow.get_mpz_t(), 5, q);
  std::string digits = BigInt(v.numerator() * five_pow).get_str(10);
  if (digits.size() < q + 1) digits.insert(0, q + 1 - digits.size(), '0');
  const std::size_t int_len = digits.size() - q;
  std::string out = digits.substr(0, int_len);
  const std::uint64_t places = std::min(q, max_places);
  if (places > 0) {
    out += '.';
    out.append(digits, int_len, places);
  }
  return out;
}

std::string decimal_expansion(const DyadicRational& v, std::uint64_t max_places) {
  std::string out = decimal_expansion_fixed(v, max_places);
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

}  // namespace splaytrav
