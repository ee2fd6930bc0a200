#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lrs {

using BigInt = mpz_class;

/// Exact signed rational in canonical form (positive denominator, reduced).
/// Backed by GMP; every operation is exact.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value);
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "p", "-p", "p/q", "-p/q" with decimal digits. No whitespace, no
  /// zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws Error(invalid_argument) on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class value);
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);
/// q^e for e >= 0; q^e for e < 0 requires q != 0.
Rational pow(const Rational& q, long e);
/// Generalized binomial C(n, k) for any integer n and k >= 0; zero for k < 0.
BigInt binomial(long n, long k);

/// Comma-separated list of rationals ("1,-2,3/4"). Empty input is an error.
std::vector<Rational> parse_rational_list(std::string_view text);
std::string join(std::span<const Rational> values, std::string_view sep = " ");

}  // namespace lrs
