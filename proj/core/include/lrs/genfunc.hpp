#pragma once

#include <string>
#include <vector>

#include "lrs/polynomial.hpp"
#include "lrs/sequence.hpp"

namespace lrs {

/// Ordinary generating function numerator / denominator, with the
/// denominator normalized to constant term 1. Treated as a formal series.
class RationalGF {
 public:
  /// Throws Error(invalid_argument) unless denominator(0) == 1.
  RationalGF(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }

  /// "t^2/(1 - t - t^2 - t^3)"; a numerator with several terms is
  /// parenthesized.
  std::string to_string() const;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

/// numerator a_0 + sum_{n=1}^{r-1} (a_n - sum_{j=1}^n p_j a_{n-j}) t^n,
/// denominator 1 - sum_j p_j t^j.
RationalGF genfunc_of(const SequenceSpec& spec);

/// First `count` power-series coefficients, by exact long division.
std::vector<Rational> expand(const RationalGF& gf, std::size_t count);

/// a_n = sum weight * F~_{n + shift} for all n >= 0, where F~ is the impulse
/// response of the same coefficient set. Zero weights are omitted; entries are
/// ordered by decreasing shift.
struct ShiftTerm {
  long shift;
  Rational weight;
  friend bool operator==(const ShiftTerm&, const ShiftTerm&) = default;
};
std::vector<ShiftTerm> irs_from_gf_shift(const SequenceSpec& spec);

}  // namespace lrs
