#pragma once

#include <mutex>
#include <span>
#include <vector>

#include "lrs/rational.hpp"

namespace lrs {

/// Coefficients (p_1, ..., p_r) of a_n = p_1 a_{n-1} + ... + p_r a_{n-r}.
/// Invariant: r >= 1 and p_r != 0.
class CoefficientSet {
 public:
  /// Throws Error(invalid_argument) if empty, Error(zero_leading_coefficient)
  /// if p_r == 0.
  explicit CoefficientSet(std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size(); }
  /// 1-based access, matching p_j.
  const Rational& p(std::size_t j) const { return coeffs_.at(j - 1); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool all_integer() const;

  friend bool operator==(const CoefficientSet&, const CoefficientSet&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// A member of A_r: coefficient set plus the initial window (a_0, ..., a_{r-1}).
class SequenceSpec {
 public:
  /// Throws Error(invalid_argument) when the initial window does not have
  /// exactly r entries.
  SequenceSpec(CoefficientSet coefficients, std::vector<Rational> initials);

  const CoefficientSet& coefficients() const { return coefficients_; }
  std::span<const Rational> initials() const { return initials_; }
  std::size_t order() const { return coefficients_.order(); }
  const Rational& p(std::size_t j) const { return coefficients_.p(j); }
  const Rational& a(std::size_t k) const { return initials_.at(k); }

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  CoefficientSet coefficients_;
  std::vector<Rational> initials_;
};

/// Impulse response sequence of `coefficients`: initials (0, ..., 0, 1).
SequenceSpec make_irs(const CoefficientSet& coefficients);

/// Exact evaluation of a sequence at any index n >= -r+1. Indices below 0 are
/// obtained by running the recurrence backwards (division by p_r).
///
/// Values are memoized in a contiguous array starting at index -r+1. The cache
/// is guarded by a mutex, so concurrent `term` calls on one instance are safe.
class BilateralSequence {
 public:
  explicit BilateralSequence(SequenceSpec spec);
  BilateralSequence(const BilateralSequence& other);
  BilateralSequence& operator=(const BilateralSequence& other);

  const SequenceSpec& spec() const { return spec_; }
  long lowest_index() const { return 1 - static_cast<long>(spec_.order()); }

  /// Throws Error(index_out_of_range) when n < -r+1.
  Rational term(long n) const;
  /// term(lo), ..., term(hi). Requires -r+1 <= lo <= hi.
  std::vector<Rational> terms(long lo, long hi) const;

 private:
  void extend_to(long n) const;  // caller holds mutex_

  SequenceSpec spec_;
  mutable std::mutex mutex_;
  mutable std::vector<Rational> cache_;  // cache_[i] = a_{i - r + 1}
};

std::vector<Rational> terms_range(const BilateralSequence& seq, long lo, long hi);

}  // namespace lrs
