#include "rpys/fraction.hpp"

#include <numeric>

#include "rpys/error.hpp"

namespace rpys {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ConfigError("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Fraction Fraction::parse(std::string_view text) {
  const std::string original(text);
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) throw ConfigError("not a decimal number: '" + original + "'");

  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_point = false;
  bool seen_digit = false;
  int frac_digits = 0;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_point) throw ConfigError("not a decimal number: '" + original + "'");
      seen_point = true;
      continue;
    }
    if (ch < '0' || ch > '9') throw ConfigError("not a decimal number: '" + original + "'");
    seen_digit = true;
    if (num > (INT64_MAX - 9) / 10) throw ConfigError("decimal out of range: '" + original + "'");
    num = num * 10 + (ch - '0');
    if (seen_point) {
      if (++frac_digits > 15) throw ConfigError("too many decimal places: '" + original + "'");
      den *= 10;
    }
  }
  if (!seen_digit) throw ConfigError("not a decimal number: '" + original + "'");
  return Fraction(negative ? -num : num, den);
}

std::string Fraction::to_string() const {
  // Find k with den | 10^k.
  std::int64_t scale = 1;
  int digits = 0;
  while (scale % den_ != 0) {
    if (digits == 18) return std::to_string(num_) + "/" + std::to_string(den_);
    scale *= 10;
    ++digits;
  }
  const bool negative = num_ < 0;
  const std::uint64_t mag = static_cast<std::uint64_t>(negative ? -num_ : num_);
  const std::uint64_t scaled = mag * static_cast<std::uint64_t>(scale / den_);
  const std::uint64_t pow10 = static_cast<std::uint64_t>(scale);
  std::string out = negative ? "-" : "";
  out += std::to_string(scaled / pow10);
  if (digits > 0) {
    std::string frac = std::to_string(scaled % pow10);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    out += '.';
    out += frac;
  }
  return out;
}

}  // namespace rpys
