#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "splaytrav/dyadic.hpp"
#include "splaytrav/tree.hpp"

namespace splaytrav {

/// Source of rp(M_h^{[2]}) values, queried for h = 0, 1, 2, ... in order.
using Rp2Source = std::function<std::uint64_t(Height)>;

/// rp(M_h^{[2]}), rp(M_h^{[1]}) and tsl(M_h) for h = 0..h_max.
///
/// rp2 holds h_max entries (0..h_max-1); the other columns hold h_max + 1.
struct RpTslTable {
  std::vector<std::uint64_t> rp2;
  std::vector<std::uint64_t> rp1;
  std::vector<BigInt> tsl;

  Height h_max() const { return static_cast<Height>(tsl.size()) - 1; }
};

/// Builds the table from tsl(M_0) = 1 and rp(M_0^{[1]}) = 2 with
///   rp1[h+1] = rp1[h] + rp2[h] - 1
///   tsl[h+1] = 2 tsl[h] + rp1[h]
RpTslTable build_table(Height h_max, const Rp2Source& rp2);
RpTslTable build_table(Height h_max, std::span<const std::uint64_t> rp2);

/// alpha_h = tsl(M_h) / 2^{h+1}.
DyadicRational alpha_h(const RpTslTable& table, Height h);

/// 8 (N+3)^4 / 2^{N-1}, an upper bound on alpha - alpha_{N-1}. Requires N > 1.
DyadicRational tolerance(std::uint64_t n);

/// Closed form of sum_{n >= N} n^4 / 2^n: (N^4 + 4N^3 + 18N^2 + 52N + 75) / 2^{N-1}.
DyadicRational quartic_tail(std::uint64_t n);

struct CertifiedDigits {
  std::string integer_part;      // certified integer digits; empty if uncertified
  std::string fraction_digits;   // certified fraction digits
  std::uint64_t certified_count = 0;
  std::uint64_t level = 0;       // N
  std::string lower_expansion;   // alpha_{N-1}, exact
  std::string upper_expansion;   // alpha_{N-1} + tolerance(N), exact

  /// "2.4146..." or "" when nothing is certified.
  std::string text() const;
};

/// Digits shared by the exact decimal expansions of alpha_{N-1} and
/// alpha_{N-1} + tolerance(N). Every returned digit is a digit of alpha.
CertifiedDigits certified_digits(std::uint64_t n, const Rp2Source& rp2);
CertifiedDigits certified_digits(std::uint64_t n, std::span<const std::uint64_t> rp2);

// Digit file: the digit text wrapped at 70 characters per line with a
// trailing newline, optionally preceded by "# alpha N=<N> certified=<d>".

inline constexpr std::size_t kDigitLineWidth = 70;

void write_digit_file(std::ostream& out, const CertifiedDigits& digits, bool annotated);

/// Parses a digit file back to its digit text ("2.4146..."). Header lines
/// starting with '#' are skipped. Throws std::runtime_error when malformed.
std::string read_digit_file(std::istream& in);

/// Fraction digits of a digit text (everything after the point).
std::string fraction_part(const std::string& digit_text);

/// The bundled 3007-digit value of alpha, as digit text "2.4146...".
const std::string& bundled_alpha_digits();
/// The bundled file contents, exactly as shipped.
const std::string& bundled_alpha_file();
/// FNV-1a 64 of the bundled digit text; guards the transcription.
inline constexpr std::uint64_t kBundledDigitsChecksum = 0xea3efcfd6ef8048fULL;
std::uint64_t fnv1a64(const std::string& text);

}  // namespace splaytrav
