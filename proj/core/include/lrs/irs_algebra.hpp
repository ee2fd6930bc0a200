#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrs/genfunc.hpp"
#include "lrs/matrix.hpp"
#include "lrs/sequence.hpp"

namespace lrs {

/// Weights w_s with a_n = sum_s w_s F~_{n+s}, s = 0, -1, ..., -(r-1):
/// w_0 = a_{r-1} and w_{-1-j} = sum_{k=j}^{r-2} a_k p_{r+j-k}. Zero weights
/// are omitted.
std::vector<ShiftTerm> representation_weights(const SequenceSpec& spec);

/// a_n evaluated through `representation_weights` and the extended impulse
/// response; equals the direct term exactly. Requires n >= 0.
Rational represent_by_irs(const SequenceSpec& spec, long n);

/// sum_{j=0}^k p_{r+j-k} F~_{n-1-j}; equals 1 when k == n and 0 otherwise
/// for 0 <= k, n <= r-2.
Rational delta_identity_check(const CoefficientSet& coefficients, long k, long n);

enum class Parity { even, odd };

/// Linear system whose solution c gives F~_n = sum_j c_j a_{n + delta_j}.
/// Row t (t = 0..r-1) matches both sides at n = t; the rhs is e_r.
struct ToeplitzSystem {
  ExactMatrix matrix;
  std::vector<Rational> rhs;
  Parity parity;
  /// The j labels of the unknowns c_j, in column order.
  std::vector<long> unknown_shifts;
  /// Offset delta_j of the sequence index multiplying c_j, in column order.
  std::vector<long> deltas;
};

/// Even r: j = r/2..r-1 with delta = r-j, then j = r..3r/2-1 with
/// delta = r-j-1. Odd r: j = (r-1)/2..3(r-1)/2 with delta = r-j-1.
ToeplitzSystem build_toeplitz(const SequenceSpec& spec);

struct IrsTerm {
  long delta;
  Rational c;
  friend bool operator==(const IrsTerm&, const IrsTerm&) = default;
};

/// F~_n = sum c * a_{n + delta}.
struct IrsRepresentation {
  std::vector<IrsTerm> terms;

  /// "F~_n = (6/19)*a[n+1] + (-4/19)*a[n] + (-1/19)*a[n-1]"
  std::string to_string() const;
  /// "F~_n = (6/19)a[n+1] - (4/19)a[n] - (1/19)a[n-1]"; unit coefficients are
  /// written bare.
  std::string to_signed_string() const;
};

/// Throws Error(singular_system) when the matrix is singular; there is then
/// no unique representation of the impulse response in terms of the sequence.
IrsRepresentation solve_toeplitz(const ToeplitzSystem& system);

/// Closed coefficients of F~_n = c1 a_{n+1} + c2 a_{n-1} for order 2:
///   c1 = (a_1 - a_0 p_1) / (p_1 D),  c2 = -a_1 p_2 / (p_1 D),
///   D = a_1^2 - a_0 a_1 p_1 - a_0^2 p_2.
/// Throws Error(precondition_failed) if the order is not 2, p_1 == 0 or D == 0.
std::pair<Rational, Rational> order2_coefficients(const SequenceSpec& spec);

/// For two order-2 sequences over the same coefficients: true iff their
/// initial vectors are independent and neither one is a unit shift of the
/// impulse response (initials (1/p_2, 0)).
/// Throws Error(invalid_argument) on mismatched coefficient sets.
bool is_nontrivial_basis(const SequenceSpec& b1, const SequenceSpec& b2);

/// (c1, c2) with c1 b1_n + c2 b2_n = target_n for all n.
/// Throws Error(singular_system) when the initial vectors are dependent.
std::pair<Rational, Rational> decompose_in_basis(const SequenceSpec& target, const SequenceSpec& b1,
                                                 const SequenceSpec& b2);

}  // namespace lrs
