#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace fibgreedy {

/**
 * Arbitrary-precision signed integer.
 *
 * Thin value wrapper over GMP's mpz_class. Zero has a single representation
 * and every operation is exact.
 */
class Integer {
 public:
  Integer() = default;
  Integer(long long value) : value_(static_cast<long>(value)) {}  // NOLINT
  explicit Integer(mpz_class value) : value_(std::move(value)) {}

  // Decimal digits with optional leading sign. Throws ParseError.
  static Integer parse(std::string_view text);

  std::string to_string() const { return value_.get_str(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  Integer abs() const;

  // Number of decimal digits of |value| (1 for zero).
  std::size_t digits10() const;

  // Requires the value to fit; throws std::overflow_error otherwise.
  long long to_int64() const;

  const mpz_class& raw() const { return value_; }

  Integer operator-() const { return Integer(mpz_class(-value_)); }

  Integer& operator+=(const Integer& rhs) { value_ += rhs.value_; return *this; }
  Integer& operator-=(const Integer& rhs) { value_ -= rhs.value_; return *this; }
  Integer& operator*=(const Integer& rhs) { value_ *= rhs.value_; return *this; }

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }

  friend bool operator==(const Integer& lhs, const Integer& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

Integer gcd(const Integer& a, const Integer& b);

// Truncating quotient; the divisor must be nonzero.
Integer quotient(const Integer& a, const Integer& b);
Integer remainder(const Integer& a, const Integer& b);

// 10^exponent.
Integer pow10(unsigned exponent);

/**
 * Exact fraction, always stored in lowest terms with a positive denominator.
 *
 * Reduction happens in the constructor, so equality is structural and every
 * formatted value is canonical.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(long long value) : num_(value), den_(1) {}           // NOLINT
  // Throws DivisionByZero when denominator is zero.
  Rational(Integer numerator, Integer denominator);

  // 1/denominator.
  static Rational unit(const Integer& denominator) { return Rational(Integer(1), denominator); }

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_integer() const { return den_ == Integer(1); }

  Rational reciprocal() const { return Rational(den_, num_); }
  Rational operator-() const;

  friend Rational operator+(const Rational& lhs, const Rational& rhs);
  friend Rational operator-(const Rational& lhs, const Rational& rhs);
  friend Rational operator*(const Rational& lhs, const Rational& rhs);
  friend Rational operator/(const Rational& lhs, const Rational& rhs);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  // Cross-multiplication; denominators are positive.
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ * rhs.den_ <=> rhs.num_ * lhs.den_;
  }

 private:
  struct Reduced {};
  Rational(Integer numerator, Integer denominator, Reduced)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  Integer num_;
  Integer den_;
};

// Accepts "p/q" (signed integers, q != 0) or a finite decimal "[-]d[.ddd]".
// Throws ParseError naming the offending token, DivisionByZero for q = 0.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& x);

// Display-only decimal rendering rounded to `significant` digits, in the
// style of printf's %g. Computed with integers; never feeds back into
// any calculation.
std::string format_approx(const Rational& x, int significant = 6);

inline std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << format_rational(x); }

}  // namespace fibgreedy
