#include "amalg/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace amalg {

namespace {

using int128 = __int128;

long long checked_narrow(int128 v, const char* what) {
  if (v > std::numeric_limits<long long>::max()) {
    throw std::overflow_error(std::string("rational overflow in ") + what);
  }
  return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den <= 0) {
    throw std::invalid_argument("rational denominator must be positive");
  }
  if (num < 0) {
    throw std::invalid_argument("rational value must be nonnegative");
  }
  long long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::from_int(long long v) { return Rational(v, 1); }

Rational Rational::parse(std::string_view text) {
  auto parse_part = [](std::string_view part, const char* what) -> long long {
    long long value = 0;
    if (part.empty()) {
      throw std::invalid_argument(std::string("empty rational ") + what);
    }
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("malformed rational \"" + std::string(part) + "\"");
    }
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_part(text, "numerator"), 1);
  }
  long long num = parse_part(text.substr(0, slash), "numerator");
  long long den = parse_part(text.substr(slash + 1), "denominator");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) {
    return std::to_string(num_);
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& other) {
  int128 num = int128(num_) * other.den_ + int128(other.num_) * den_;
  int128 den = int128(den_) * other.den_;
  int128 g = gcd128(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  num_ = checked_narrow(num, "addition");
  den_ = checked_narrow(den, "addition");
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  int128 lhs = int128(num_) * other.den_;
  int128 rhs = int128(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::abs_diff(const Rational& a, const Rational& b) {
  const Rational& hi = (a < b) ? b : a;
  const Rational& lo = (a < b) ? a : b;
  int128 num = int128(hi.num_) * lo.den_ - int128(lo.num_) * hi.den_;
  int128 den = int128(hi.den_) * lo.den_;
  int128 g = gcd128(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  Rational out;
  out.num_ = checked_narrow(num, "abs_diff");
  out.den_ = checked_narrow(den, "abs_diff");
  return out;
}

}  // namespace amalg
