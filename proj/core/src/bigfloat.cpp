#include "lrs/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace lrs {
namespace {

mpfr_prec_t clamp_precision(long bits) {
  return static_cast<mpfr_prec_t>(std::max<long>(bits, MPFR_PREC_MIN));
}

void widen_to(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long precision_bits) {
  mpfr_init2(value_, clamp_precision(precision_bits));
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs; leave `other` as a valid minimal-precision zero.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(long bits) const {
  BigFloat out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  digits = std::max(digits, 1);
  const int size = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", digits - 1, value_);
  return std::string(buffer.data(), static_cast<std::size_t>(size));
}

long BigFloat::exponent2() const {
  if (is_zero()) return mpfr_get_emin();
  return static_cast<long>(mpfr_get_exp(value_)) - 1;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen_to(value_, o.value_);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen_to(value_, o.value_);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen_to(value_, o.value_);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen_to(value_, o.value_);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x);
  mpfr_sqrt(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigFloat ldexp2(long e, long precision_bits) {
  BigFloat out(precision_bits);
  mpfr_set_ui_2exp(out.get(), 1, e, MPFR_RNDN);
  return out;
}

BigFloat floor(const BigFloat& x) {
  BigFloat out(x);
  mpfr_floor(out.get(), out.get());
  return out;
}

ComplexHP& ComplexHP::operator+=(const ComplexHP& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexHP& ComplexHP::operator-=(const ComplexHP& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexHP& ComplexHP::operator*=(const ComplexHP& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexHP& ComplexHP::operator/=(const ComplexHP& o) {
  const BigFloat den = o.re * o.re + o.im * o.im;
  BigFloat r = (re * o.re + im * o.im) / den;
  BigFloat i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexHP& ComplexHP::operator*=(const BigFloat& s) {
  re *= s;
  im *= s;
  return *this;
}

BigFloat abs(const ComplexHP& z) {
  BigFloat out(std::max(z.re.precision(), z.im.precision()));
  mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return out;
}

ComplexHP pow(const ComplexHP& z, long e) {
  const long bits = z.precision();
  ComplexHP base = z;
  if (e < 0) {
    base = ComplexHP(BigFloat(1.0, bits), BigFloat(bits)) / z;
    e = -e;
  }
  ComplexHP result(BigFloat(1.0, bits), BigFloat(bits));
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

ComplexHP with_precision(const ComplexHP& z, long bits) {
  return {z.re.with_precision(bits), z.im.with_precision(bits)};
}

}  // namespace lrs
