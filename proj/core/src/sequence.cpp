#include "lrs/sequence.hpp"

#include <string>

#include "lrs/error.hpp"

namespace lrs {

CoefficientSet::CoefficientSet(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::invalid_argument, "coefficient set must have order r >= 1");
  }
  if (coeffs_.back().is_zero()) {
    throw Error(ErrorCode::zero_leading_coefficient,
                "p_r must be nonzero; the impulse response and backward extension are undefined");
  }
}

bool CoefficientSet::all_integer() const {
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

SequenceSpec::SequenceSpec(CoefficientSet coefficients, std::vector<Rational> initials)
    : coefficients_(std::move(coefficients)), initials_(std::move(initials)) {
  if (initials_.size() != coefficients_.order()) {
    throw Error(ErrorCode::invalid_argument,
                "expected " + std::to_string(coefficients_.order()) + " initial values, got " +
                    std::to_string(initials_.size()));
  }
}

SequenceSpec make_irs(const CoefficientSet& coefficients) {
  std::vector<Rational> initials(coefficients.order(), Rational(0));
  initials.back() = Rational(1);
  return SequenceSpec(coefficients, std::move(initials));
}

BilateralSequence::BilateralSequence(SequenceSpec spec) : spec_(std::move(spec)) {
  const std::size_t r = spec_.order();
  // Layout: r-1 backward values followed by the initial window.
  cache_.assign(r - 1, Rational(0));
  cache_.insert(cache_.end(), spec_.initials().begin(), spec_.initials().end());
  // a_{m-r} = (a_m - sum_{j=1}^{r-1} p_j a_{m-j}) / p_r, for m = r-1 down to 1.
  const long offset = static_cast<long>(r) - 1;
  for (long m = offset; m >= 1; --m) {
    Rational acc = cache_[static_cast<std::size_t>(m + offset)];
    for (std::size_t j = 1; j < r; ++j) {
      acc -= spec_.p(j) * cache_[static_cast<std::size_t>(m - static_cast<long>(j) + offset)];
    }
    cache_[static_cast<std::size_t>(m - static_cast<long>(r) + offset)] = acc / spec_.p(r);
  }
}

BilateralSequence::BilateralSequence(const BilateralSequence& other) : spec_(other.spec_) {
  std::lock_guard lock(other.mutex_);
  cache_ = other.cache_;
}

BilateralSequence& BilateralSequence::operator=(const BilateralSequence& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mutex_, other.mutex_);
  spec_ = other.spec_;
  cache_ = other.cache_;
  return *this;
}

void BilateralSequence::extend_to(long n) const {
  const std::size_t r = spec_.order();
  const long offset = static_cast<long>(r) - 1;
  const auto want = static_cast<std::size_t>(n + offset);
  cache_.reserve(want + 1);
  while (cache_.size() <= want) {
    const std::size_t i = cache_.size();
    Rational acc(0);
    for (std::size_t j = 1; j <= r; ++j) acc += spec_.p(j) * cache_[i - j];
    cache_.push_back(std::move(acc));
  }
}

Rational BilateralSequence::term(long n) const {
  if (n < lowest_index()) {
    throw Error(ErrorCode::index_out_of_range,
                "index " + std::to_string(n) + " is below the backward-extension floor " +
                    std::to_string(lowest_index()));
  }
  std::lock_guard lock(mutex_);
  extend_to(n);
  return cache_[static_cast<std::size_t>(n - lowest_index())];
}

std::vector<Rational> BilateralSequence::terms(long lo, long hi) const {
  if (lo < lowest_index()) {
    throw Error(ErrorCode::index_out_of_range,
                "index " + std::to_string(lo) + " is below the backward-extension floor " +
                    std::to_string(lowest_index()));
  }
  if (hi < lo) throw Error(ErrorCode::invalid_argument, "empty range: hi < lo");
  std::lock_guard lock(mutex_);
  extend_to(hi);
  const auto first = cache_.begin() + (lo - lowest_index());
  return {first, first + (hi - lo + 1)};
}

std::vector<Rational> terms_range(const BilateralSequence& seq, long lo, long hi) {
  return seq.terms(lo, hi);
}

}  // namespace lrs
