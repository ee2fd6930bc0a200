#pragma once

#include <vector>

#include "lrs/bigfloat.hpp"
#include "lrs/polynomial.hpp"
#include "lrs/sequence.hpp"

namespace lrs {

struct CharacteristicRoot {
  ComplexHP alpha;
  int multiplicity = 1;
};

/// Distinct roots, with multiplicities, of p(t) = t^r - p_1 t^{r-1} - ... - p_r.
///
/// Roots are carried at an internal working precision above the requested
/// one; `precision_bits()` is the precision the caller asked for and the one
/// all evaluations round to.
class RootDecomposition {
 public:
  RootDecomposition(std::vector<CharacteristicRoot> roots, Polynomial characteristic,
                    std::vector<BigFloat> residuals, long precision_bits);

  const std::vector<CharacteristicRoot>& roots() const { return roots_; }
  /// Ascending coefficients of the characteristic polynomial.
  const Polynomial& characteristic() const { return characteristic_; }
  /// |p(alpha_j)|, one per distinct root.
  const std::vector<BigFloat>& residuals() const { return residuals_; }
  long precision_bits() const { return precision_bits_; }
  std::size_t order() const { return static_cast<std::size_t>(characteristic_.degree()); }

 private:
  std::vector<CharacteristicRoot> roots_;
  Polynomial characteristic_;
  std::vector<BigFloat> residuals_;
  long precision_bits_;
};

/// Characteristic polynomial t^r - sum_j p_j t^{r-j}, ascending coefficients.
Polynomial characteristic_polynomial(const CoefficientSet& coefficients);

/// Simultaneous (Aberth-Ehrlich) iteration on all r roots, followed by
/// clustering of approximations closer than 2^{-precision_bits/3} into one
/// root of the corresponding multiplicity.
///
/// Throws Error(non_convergence) when the iteration stalls or a residual
/// exceeds 2^{-precision_bits/2}; Error(ambiguous_clustering) when the
/// grouping into clusters is not clear-cut.
RootDecomposition characteristic_roots(const CoefficientSet& coefficients,
                                       long precision_bits = BigFloat::kDefaultPrecisionBits);

/// Impulse response value from the roots. Each distinct root contributes the
/// residue of z^n / p(z); for a simple root this is
/// alpha^n / prod_{k != j} (alpha_j - alpha_k), for a sole root of
/// multiplicity m it is C(n, m-1) alpha^{n-m+1}. Valid for every n >= -r+1.
ComplexHP irs_closed_form(const RootDecomposition& roots, long n);

/// a_n for an arbitrary member of A_r: the exact representation weights of
/// `represent_by_irs` applied to closed-form impulse response values.
ComplexHP general_closed_form(const SequenceSpec& spec, const RootDecomposition& roots, long n);

/// Order-2 closed form with two roots alpha, beta:
///   ((a_1 - beta a_0) alpha^n - (a_1 - alpha a_0) beta^n) / (alpha - beta),
/// or n a_1 alpha^{n-1} - (n-1) a_0 alpha^n for a double root.
ComplexHP order2_closed_form(const SequenceSpec& spec, long n,
                             long precision_bits = BigFloat::kDefaultPrecisionBits);

/// |approx - exact| / max(1, |exact|), including the imaginary part.
BigFloat relative_error(const ComplexHP& approx, const Rational& exact);

/// Agreement tolerance used for closed-form checks: 2^{-(bits/4 + 3)}
/// (about 6.8e-21 at 256 bits).
BigFloat closed_form_tolerance(long precision_bits);

}  // namespace lrs
