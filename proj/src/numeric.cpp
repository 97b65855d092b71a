#include "fibgreedy/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fibgreedy/errors.hpp"

namespace fibgreedy {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// [+-]?[0-9]+
bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return is_digits(s);
}

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

Integer Integer::parse(std::string_view text) {
  if (!is_signed_integer(text)) throw ParseError("invalid integer " + quoted(text));
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(mpz_class(std::string(text), 10));
}

Integer Integer::abs() const {
  mpz_class r;
  mpz_abs(r.get_mpz_t(), value_.get_mpz_t());
  return Integer(std::move(r));
}

std::size_t Integer::digits10() const {
  if (is_zero()) return 1;
  std::string s = abs().to_string();
  return s.size();
}

long long Integer::to_int64() const {
  if (!value_.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return value_.get_si();
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(r));
}

Integer quotient(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionByZero("integer division by zero");
  mpz_class r;
  mpz_tdiv_q(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(r));
}

Integer remainder(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionByZero("integer division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(r));
}

Integer pow10(unsigned exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return Integer(std::move(r));
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(Integer numerator, Integer denominator) {
  if (denominator.is_zero()) throw DivisionByZero("zero denominator");
  if (denominator.sign() < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Integer g = gcd(numerator, denominator);
  if (g != Integer(1)) {
    numerator = quotient(numerator, g);
    denominator = quotient(denominator, g);
  }
  num_ = std::move(numerator);
  den_ = std::move(denominator);
}

Rational Rational::operator-() const { return Rational(-num_, den_, Reduced{}); }

Rational operator+(const Rational& lhs, const Rational& rhs) {
  return Rational(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

Rational operator-(const Rational& lhs, const Rational& rhs) {
  return Rational(lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

Rational operator*(const Rational& lhs, const Rational& rhs) {
  return Rational(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
  if (rhs.num_.is_zero()) throw DivisionByZero("rational division by zero");
  return Rational(lhs.num_ * rhs.den_, lhs.den_ * rhs.num_);
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view p = text.substr(0, slash);
    std::string_view q = text.substr(slash + 1);
    if (!is_signed_integer(p)) throw ParseError("invalid numerator " + quoted(p) + " in " + quoted(text));
    if (!is_signed_integer(q)) throw ParseError("invalid denominator " + quoted(q) + " in " + quoted(text));
    Integer den = Integer::parse(q);
    if (den.is_zero()) throw DivisionByZero("zero denominator in " + quoted(text));
    return Rational(Integer::parse(p), den);
  }

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view whole = body;
  std::string_view frac;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    whole = body.substr(0, dot);
    frac = body.substr(dot + 1);
    if (!is_digits(frac)) throw ParseError("invalid fractional part " + quoted(frac) + " in " + quoted(text));
  }
  if (!is_digits(whole)) throw ParseError("invalid integer part " + quoted(whole) + " in " + quoted(text));

  Integer digits = Integer::parse(std::string(whole) + std::string(frac));
  if (negative) digits = -digits;
  return Rational(digits, pow10(static_cast<unsigned>(frac.size())));
}

std::string format_rational(const Rational& x) {
  if (x.is_integer()) return x.numerator().to_string();
  return x.numerator().to_string() + "/" + x.denominator().to_string();
}

std::string format_approx(const Rational& x, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be positive");
  if (x.sign() == 0) return "0";

  const Integer p = x.numerator().abs();
  const Integer& q = x.denominator();

  // exponent = floor(log10(p/q)), starting from a digit-count estimate.
  long exponent = static_cast<long>(p.digits10()) - static_cast<long>(q.digits10());
  auto at_least_pow10 = [&](long e) {  // p/q >= 10^e
    return e >= 0 ? p >= q * pow10(static_cast<unsigned>(e)) : p * pow10(static_cast<unsigned>(-e)) >= q;
  };
  while (!at_least_pow10(exponent)) --exponent;
  while (at_least_pow10(exponent + 1)) ++exponent;

  // mantissa = round(p/q * 10^(significant-1-exponent)), half away from zero.
  const long shift = significant - 1 - exponent;
  Integer num = p;
  Integer den = q;
  if (shift >= 0) {
    num *= pow10(static_cast<unsigned>(shift));
  } else {
    den *= pow10(static_cast<unsigned>(-shift));
  }
  Integer mantissa = quotient(num * Integer(2) + den, den * Integer(2));
  if (mantissa == pow10(static_cast<unsigned>(significant))) {
    mantissa = quotient(mantissa, Integer(10));
    ++exponent;
  }

  std::string digits = mantissa.to_string();
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out = x.sign() < 0 ? "-" : "";
  if (exponent < -4 || exponent >= significant) {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += exponent < 0 ? "e-" : "e+";
    std::string e = std::to_string(exponent < 0 ? -exponent : exponent);
    if (e.size() < 2) e = "0" + e;
    return out + e;
  }
  if (exponent < 0) {
    return out + "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  }
  const auto int_len = static_cast<std::size_t>(exponent + 1);
  if (digits.size() <= int_len) return out + digits + std::string(int_len - digits.size(), '0');
  return out + digits.substr(0, int_len) + "." + digits.substr(int_len);
}

}  // namespace fibgreedy
