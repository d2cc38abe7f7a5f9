#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace minorforge {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // throws InvalidArgument on den == 0

  /// Accepts "p", "p/q" and finite decimals such as "2.75".
  static Rational parse(std::string_view text);
  /// Largest multiple of 1/den not exceeding x.
  static Rational floor_of(double x, std::int64_t den = 1'000'000);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto l = static_cast<Int128>(a.num_) * b.den_;
    const auto r = static_cast<Int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace minorforge
