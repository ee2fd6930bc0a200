#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrs/rational.hpp"

namespace lrs {

/// Dense univariate polynomial over Rational, ascending powers. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Ascending rendering such as "2 - t - 2t^2" or "t^2"; "0" when zero.
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace lrs
