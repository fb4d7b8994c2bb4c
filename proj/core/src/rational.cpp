#include "linkspace/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "linkspace/error.hpp"

namespace linkspace {

__extension__ using Wide = __int128;

struct RationalAccess {
  static Rational from_wide(Wide numerator, Wide denominator);
};

namespace {

Wide gcd128(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  *this = RationalAccess::from_wide(numerator, denominator);
}

Rational RationalAccess::from_wide(Wide numerator, Wide denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const Wide g = gcd128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!fits64(numerator) || !fits64(denominator)) {
    throw Error(ErrorCode::Overflow, "rational result exceeds 64-bit range");
  }
  return Rational(static_cast<std::int64_t>(numerator), static_cast<std::int64_t>(denominator), Rational::Reduced{});
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return RationalAccess::from_wide(-static_cast<Wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  *this = RationalAccess::from_wide(static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_,
                    static_cast<Wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  *this = RationalAccess::from_wide(static_cast<Wide>(num_) * rhs.num_, static_cast<Wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorCode::ParseError, "division by zero");
  *this = RationalAccess::from_wide(static_cast<Wide>(num_) * rhs.den_, static_cast<Wide>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const Wide a = static_cast<Wide>(lhs.num_) * rhs.den_;
  const Wide b = static_cast<Wide>(rhs.num_) * lhs.den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace linkspace
