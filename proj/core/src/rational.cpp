#include "lrs/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

#include "lrs/error.hpp"

namespace lrs {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value(std::string(text), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(BigInt(std::to_string(value), 10)) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::invalid_argument, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(std::to_string(numerator), 10), BigInt(std::to_string(denominator), 10)) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw Error(ErrorCode::parse_error, "malformed rational '" + std::string(text) + "'");
  }
  const BigInt den(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, long e) {
  if (e < 0) return Rational(1) / pow(q, -e);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  // Falling factorial n (n-1) ... (n-k+1) / k!, valid for negative n as well.
  BigInt num = 1;
  BigInt den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) throw Error(ErrorCode::parse_error, "empty rational list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(std::span<const Rational> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += values[i].to_string();
  }
  return out;
}

}  // namespace lrs
