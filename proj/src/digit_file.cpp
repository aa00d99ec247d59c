#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "splaytrav/alpha.hpp"

namespace splaytrav {

void write_digit_file(std::ostream& out, const CertifiedDigits& digits, bool annotated) {
  if (annotated) out << "# alpha N=" << digits.level << " certified=" << digits.certified_count << '\n';
  const std::string text = digits.text();
  for (std::size_t i = 0; i < text.size(); i += kDigitLineWidth) out << text.substr(i, kDigitLineWidth) << '\n';
}

std::string read_digit_file(std::istream& in) {
  std::string text;
  std::string line;
  std::size_t line_no = 0;
  bool short_line_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) continue;
    if (short_line_seen) throw std::runtime_error("line " + std::to_string(line_no) + ": digits after a short line");
    if (line.size() > kDigitLineWidth)
      throw std::runtime_error("line " + std::to_string(line_no) + ": longer than 70 characters");
    if (line.size() < kDigitLineWidth) short_line_seen = true;
    text += line;
  }
  if (text.empty()) return text;
  const auto point = text.find('.');
  const bool digits_ok = [&] {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (i != point && !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
  }();
  if (!digits_ok || point == 0 || (point != std::string::npos && text.find('.', point + 1) != std::string::npos))
    throw std::runtime_error("malformed digit text");
  return text;
}

std::string fraction_part(const std::string& digit_text) {
  const auto point = digit_text.find('.');
  return point == std::string::npos ? std::string() : digit_text.substr(point + 1);
}

const std::string& bundled_alpha_digits() {
  static const std::string digits = [] {
    std::istringstream in(bundled_alpha_file());
    return read_digit_file(in);
  }();
  return digits;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace splaytrav
