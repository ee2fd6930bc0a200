#pragma once

#include <mpfr.h>

#include <string>

#include "lrs/rational.hpp"

namespace lrs {

/// RAII wrapper over an MPFR value with an explicit working precision.
/// Binary operations produce a result at the larger operand precision;
/// rounding is to nearest.
class BigFloat {
 public:
  static constexpr long kDefaultPrecisionBits = 256;

  explicit BigFloat(long precision_bits = kDefaultPrecisionBits);
  BigFloat(double value, long precision_bits);
  BigFloat(const Rational& value, long precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Copy rounded to a different precision.
  BigFloat with_precision(long bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// floor(log2 |x|); very negative for zero.
  long exponent2() const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
/// 2^e at the given precision.
BigFloat ldexp2(long e, long precision_bits);
BigFloat floor(const BigFloat& x);

/// Complex number with BigFloat parts of a common precision.
struct ComplexHP {
  BigFloat re;
  BigFloat im;

  explicit ComplexHP(long precision_bits = BigFloat::kDefaultPrecisionBits)
      : re(precision_bits), im(precision_bits) {}
  ComplexHP(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

  long precision() const { return re.precision(); }

  ComplexHP& operator+=(const ComplexHP& o);
  ComplexHP& operator-=(const ComplexHP& o);
  ComplexHP& operator*=(const ComplexHP& o);
  ComplexHP& operator/=(const ComplexHP& o);
  ComplexHP& operator*=(const BigFloat& s);
  friend ComplexHP operator+(ComplexHP a, const ComplexHP& b) { return a += b; }
  friend ComplexHP operator-(ComplexHP a, const ComplexHP& b) { return a -= b; }
  friend ComplexHP operator*(ComplexHP a, const ComplexHP& b) { return a *= b; }
  friend ComplexHP operator/(ComplexHP a, const ComplexHP& b) { return a /= b; }
  friend ComplexHP operator*(ComplexHP a, const BigFloat& s) { return a *= s; }
  ComplexHP operator-() const { return {-re, -im}; }
};

BigFloat abs(const ComplexHP& z);
/// z^e for any integer e (z != 0 when e < 0), by binary powering.
ComplexHP pow(const ComplexHP& z, long e);
ComplexHP with_precision(const ComplexHP& z, long bits);

}  // namespace lrs
