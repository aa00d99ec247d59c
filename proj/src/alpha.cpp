#include "splaytrav/alpha.hpp"

#include <stdexcept>

namespace splaytrav {

RpTslTable build_table(Height h_max, const Rp2Source& rp2) {
  if (h_max < 0) throw std::invalid_argument("h_max must be >= 0");
  RpTslTable t;
  t.tsl.reserve(static_cast<std::size_t>(h_max) + 1);
  t.tsl.emplace_back(1);
  t.rp1.push_back(2);
  for (Height h = 0; h < h_max; ++h) {
    const std::uint64_t r2 = rp2(h);
    if (r2 == 0) throw std::invalid_argument("rp(M_h^[2]) is at least 1");
    t.rp2.push_back(r2);
    t.tsl.push_back(2 * t.tsl.back() + t.rp1.back());
    t.rp1.push_back(t.rp1.back() + r2 - 1);
  }
  return t;
}

RpTslTable build_table(Height h_max, std::span<const std::uint64_t> rp2) {
  if (h_max > 0 && rp2.size() < static_cast<std::size_t>(h_max))
    throw std::invalid_argument("rp2 table too short for h_max");
  return build_table(h_max, [rp2](Height h) { return rp2[static_cast<std::size_t>(h)]; });
}

DyadicRational alpha_h(const RpTslTable& table, Height h) {
  if (h < 0 || h > table.h_max()) throw std::out_of_range("height outside the table");
  return {table.tsl[static_cast<std::size_t>(h)], static_cast<std::uint64_t>(h) + 1};
}

DyadicRational tolerance(std::uint64_t n) {
  if (n <= 1) throw std::invalid_argument("tolerance needs N > 1");
  BigInt base = BigInt(static_cast<unsigned long>(n)) + 3;
  BigInt num = 8 * base * base * base * base;
  return {std::move(num), n - 1};
}

DyadicRational quartic_tail(std::uint64_t n) {
  const BigInt v = static_cast<unsigned long>(n);
  BigInt num = v * v * v * v + 4 * v * v * v + 18 * v * v + 52 * v + 75;
  return DyadicRational::from_pow2(std::move(num), static_cast<std::int64_t>(n) - 1);
}

std::string CertifiedDigits::text() const {
  if (integer_part.empty()) return {};
  return integer_part + "." + fraction_digits;
}

CertifiedDigits certified_digits(std::uint64_t n, const Rp2Source& rp2) {
  if (n <= 1) throw std::invalid_argument("certification needs N > 1");
  const auto top = static_cast<Height>(n - 1);
  const RpTslTable table = build_table(top, rp2);
  const DyadicRational lower = alpha_h(table, top);
  const DyadicRational upper = lower + tolerance(n);

  CertifiedDigits out;
  out.level = n;
  out.lower_expansion = decimal_expansion_fixed(lower, lower.exponent());
  out.upper_expansion = decimal_expansion_fixed(upper, upper.exponent());

  // Truncation is monotone, so a prefix shared by both bounds is shared by
  // every value between them.
  const std::string& lo = out.lower_expansion;
  const std::string& hi = out.upper_expansion;
  const auto lo_point = lo.find('.');
  const auto hi_point = hi.find('.');
  if (lo.substr(0, lo_point) != hi.substr(0, hi_point)) return out;
  out.integer_part = lo.substr(0, lo_point);
  if (lo_point == std::string::npos || hi_point == std::string::npos) return out;
  std::size_t i = lo_point + 1;
  while (i < lo.size() && i < hi.size() && lo[i] == hi[i]) ++i;
  out.fraction_digits = lo.substr(lo_point + 1, i - lo_point - 1);
  out.certified_count = out.fraction_digits.size();
  return out;
}

CertifiedDigits certified_digits(std::uint64_t n, std::span<const std::uint64_t> rp2) {
  if (n >= 2 && rp2.size() + 1 < n - 1) throw std::invalid_argument("rp2 table too short for N");
  return certified_digits(n, [rp2](Height h) { return rp2[static_cast<std::size_t>(h)]; });
}

}  // namespace splaytrav
