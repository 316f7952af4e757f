#include "vsbound/rational.hpp"

#include "vsbound/error.hpp"

#include <algorithm>
#include <ostream>

namespace vsbound {

using boost::multiprecision::cpp_rational;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  // Boost rejects negative denominators outright.
  value_ = den < 0 ? cpp_rational(-num, -den) : cpp_rational(num, den);
}

Rational Rational::infinity() {
  Rational r;
  r.infinite_ = true;
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  const auto integral = [](std::string_view part) {
    if (!part.empty() && part.front() == '-') part.remove_prefix(1);
    return !part.empty() && std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto cut = text.find('/');
  if (!integral(text.substr(0, cut)) || (cut != std::string_view::npos && !integral(text.substr(cut + 1))))
    throw InputError("malformed rational '" + std::string(text) + "'");
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)), BigInt(1));
    return Rational(BigInt(std::string(text.substr(0, slash))), BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::runtime_error&) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
}

BigInt Rational::numerator() const {
  if (infinite_) throw InputError("infinity has no numerator");
  return boost::multiprecision::numerator(value_);
}

BigInt Rational::denominator() const {
  if (infinite_) throw InputError("infinity has no denominator");
  return boost::multiprecision::denominator(value_);
}

const cpp_rational& Rational::value() const {
  if (infinite_) throw InputError("infinity has no finite value");
  return value_;
}

BigInt Rational::floor() const {
  const BigInt num = numerator();
  const BigInt den = denominator();
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

BigInt Rational::ceil() const { return -(-*this).floor(); }

bool Rational::is_integer() const { return !infinite_ && denominator() == 1; }

std::string Rational::to_string() const {
  if (infinite_) return "inf";
  return numerator().str() + "/" + denominator().str();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.infinite_ || b.infinite_) return Rational::infinity();
  return Rational(cpp_rational(a.value_ + b.value_));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (b.infinite_) throw InputError("subtracting infinity");
  if (a.infinite_) return a;
  return Rational(cpp_rational(a.value_ - b.value_));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.infinite_ || b.infinite_) {
    const Rational& finite = a.infinite_ ? b : a;
    if (!finite.infinite_ && finite.value_ <= 0) throw InputError("infinity times a non-positive value");
    return Rational::infinity();
  }
  return Rational(cpp_rational(a.value_ * b.value_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.infinite_) throw InputError("division by infinity");
  if (b.value_ == 0) throw InputError("division by zero");
  if (a.infinite_) {
    if (b.value_ < 0) throw InputError("infinity divided by a negative value");
    return a;
  }
  return Rational(cpp_rational(a.value_ / b.value_));
}

Rational Rational::operator-() const {
  if (infinite_) throw InputError("negating infinity");
  return Rational(cpp_rational(-value_));
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace vsbound
