#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rpys {

/// Exact rational number with a positive denominator, always kept in lowest
/// terms. Used for every threshold that takes part in a membership decision
/// (similarity threshold, percentile level, expected counts, gate ratio) so
/// that no decision depends on floating-point rounding.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den = 1);

  /// Parses a plain decimal such as "0.75", "1", ".001" or "2.5".
  /// Throws ConfigError on anything else (signs other than a leading '-',
  /// exponents, more than 15 fractional digits).
  static Fraction parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Shortest exact decimal when the denominator divides a power of ten,
  /// "num/den" otherwise.
  std::string to_string() const;

  friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) noexcept {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) noexcept { return !(b < a); }
  friend bool operator>(const Fraction& a, const Fraction& b) noexcept { return b < a; }
  friend bool operator>=(const Fraction& a, const Fraction& b) noexcept { return !(a < b); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace rpys
