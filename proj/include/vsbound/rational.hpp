#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <string>
#include <string_view>

namespace vsbound {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with positive denominator, plus a
/// distinguished +Infinity. Infinity only supports the operations the
/// bounds need: comparison, scaling by a positive value, and min().
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

  static Rational infinity();
  /// Parses "a", "a/b" or "inf".
  static Rational parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  BigInt numerator() const;
  BigInt denominator() const;
  const boost::multiprecision::cpp_rational& value() const;

  BigInt floor() const;
  BigInt ceil() const;
  bool is_integer() const;

  /// "num/den" (always with a denominator) or "inf".
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  boost::multiprecision::cpp_rational value_{0};
  bool infinite_ = false;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace vsbound
