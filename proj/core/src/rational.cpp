#include "minorforge/rational.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "minorforge/error.hpp"

namespace minorforge {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos)
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw Error(ErrorCode::InvalidArgument, "too many decimals: '" + std::string(text) + "'");
    std::string_view head = text.substr(0, dot);
    const bool negative = !head.empty() && head.front() == '-';
    if (negative) head.remove_prefix(1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t ip = head.empty() ? 0 : parse_int(head, text);
    const std::int64_t fp = frac.empty() ? 0 : parse_int(frac, text);
    if (ip < 0 || fp < 0) throw Error(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
    const std::int64_t magnitude = ip * scale + fp;
    return Rational(negative ? -magnitude : magnitude, scale);
  }
  return Rational(parse_int(text, text), 1);
}

Rational Rational::floor_of(double x, std::int64_t den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  return Rational(static_cast<std::int64_t>(std::floor(x * static_cast<double>(den))), den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace minorforge
