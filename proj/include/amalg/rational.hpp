#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace amalg {

// Nonnegative rational in lowest terms. All distance arithmetic in the
// library goes through this type; there is no floating point anywhere.
// Operations throw std::overflow_error if a value leaves the 64-bit range
// after normalization.
class Rational {
 public:
  Rational() = default;  // zero
  Rational(long long num, long long den);

  static Rational from_int(long long v);
  // Accepts "p/q" or the integer shorthand "n". Throws std::invalid_argument
  // on anything else (including negative values).
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  // Canonical rendering: lowest terms, integer shorthand for q = 1.
  std::string str() const;

  Rational& operator+=(const Rational& other);
  friend Rational operator+(Rational lhs, const Rational& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend bool operator==(const Rational&, const Rational&) = default;
  std::strong_ordering operator<=>(const Rational& other) const;

  static Rational abs_diff(const Rational& a, const Rational& b);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace amalg
