#include "lrs/genfunc.hpp"

#include "lrs/error.hpp"

namespace lrs {

RationalGF::RationalGF(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.coeff(0) != Rational(1)) {
    throw Error(ErrorCode::invalid_argument, "generating function denominator must have constant term 1");
  }
}

std::string RationalGF::to_string() const {
  std::string num = numerator_.to_string();
  std::size_t nonzero = 0;
  for (const auto& c : numerator_.coeffs()) nonzero += c.is_zero() ? 0 : 1;
  if (nonzero > 1) num = "(" + num + ")";
  return num + "/(" + denominator_.to_string() + ")";
}

RationalGF genfunc_of(const SequenceSpec& spec) {
  const std::size_t r = spec.order();
  std::vector<Rational> num(r, Rational(0));
  num[0] = spec.a(0);
  for (std::size_t n = 1; n < r; ++n) {
    Rational c = spec.a(n);
    for (std::size_t j = 1; j <= n; ++j) c -= spec.p(j) * spec.a(n - j);
    num[n] = std::move(c);
  }
  std::vector<Rational> den(r + 1, Rational(0));
  den[0] = Rational(1);
  for (std::size_t j = 1; j <= r; ++j) den[j] = -spec.p(j);
  return RationalGF(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

std::vector<Rational> expand(const RationalGF& gf, std::size_t count) {
  const auto& den = gf.denominator();
  const auto deg = static_cast<std::size_t>(den.degree());
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational c = gf.numerator().coeff(n);
    for (std::size_t j = 1; j <= deg && j <= n; ++j) c -= den.coeff(j) * out[n - j];
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ShiftTerm> irs_from_gf_shift(const SequenceSpec& spec) {
  const RationalGF gf = genfunc_of(spec);
  const long r = static_cast<long>(spec.order());
  std::vector<ShiftTerm> out;
  // [t^n] t^k / D(t) = [t^{n-k}] 1/D(t) = F~_{n-k+r-1}.
  for (long k = 0; k < r; ++k) {
    Rational w = gf.numerator().coeff(static_cast<std::size_t>(k));
    if (!w.is_zero()) out.push_back({r - 1 - k, std::move(w)});
  }
  return out;
}

}  // namespace lrs
