#include "lrs/irs_algebra.hpp"

#include <string>

#include "lrs/error.hpp"

namespace lrs {
namespace {

std::string index_label(long delta) {
  if (delta == 0) return "a[n]";
  return delta > 0 ? "a[n+" + std::to_string(delta) + "]" : "a[n-" + std::to_string(-delta) + "]";
}

void require_order2(const SequenceSpec& spec, const char* what) {
  if (spec.order() != 2) {
    throw Error(ErrorCode::precondition_failed, std::string(what) + " requires an order-2 sequence");
  }
}

}  // namespace

std::vector<ShiftTerm> representation_weights(const SequenceSpec& spec) {
  const long r = static_cast<long>(spec.order());
  std::vector<ShiftTerm> out;
  if (!spec.a(static_cast<std::size_t>(r - 1)).is_zero()) {
    out.push_back({0, spec.a(static_cast<std::size_t>(r - 1))});
  }
  for (long j = 0; j <= r - 2; ++j) {
    Rational w(0);
    for (long k = j; k <= r - 2; ++k) {
      w += spec.a(static_cast<std::size_t>(k)) * spec.p(static_cast<std::size_t>(r + j - k));
    }
    if (!w.is_zero()) out.push_back({-1 - j, std::move(w)});
  }
  return out;
}

Rational represent_by_irs(const SequenceSpec& spec, long n) {
  if (n < 0) throw Error(ErrorCode::index_out_of_range, "represent_by_irs requires n >= 0");
  const BilateralSequence irs(make_irs(spec.coefficients()));
  Rational total(0);
  for (const ShiftTerm& t : representation_weights(spec)) total += t.weight * irs.term(n + t.shift);
  return total;
}

Rational delta_identity_check(const CoefficientSet& coefficients, long k, long n) {
  const long r = static_cast<long>(coefficients.order());
  if (k < 0 || k > r - 2 || n < 0 || n > r - 2) {
    throw Error(ErrorCode::index_out_of_range, "delta identity requires 0 <= k, n <= r-2");
  }
  const BilateralSequence irs(make_irs(coefficients));
  Rational total(0);
  for (long j = 0; j <= k; ++j) {
    total += coefficients.p(static_cast<std::size_t>(r + j - k)) * irs.term(n - 1 - j);
  }
  return total;
}

ToeplitzSystem build_toeplitz(const SequenceSpec& spec) {
  const long r = static_cast<long>(spec.order());
  std::vector<long> shifts;
  std::vector<long> deltas;
  Parity parity;
  if (r % 2 == 0) {
    parity = Parity::even;
    for (long j = r / 2; j <= r - 1; ++j) {
      shifts.push_back(j);
      deltas.push_back(r - j);
    }
    for (long j = r; j <= 3 * r / 2 - 1; ++j) {
      shifts.push_back(j);
      deltas.push_back(r - j - 1);
    }
  } else {
    parity = Parity::odd;
    for (long j = (r - 1) / 2; j <= 3 * (r - 1) / 2; ++j) {
      shifts.push_back(j);
      deltas.push_back(r - j - 1);
    }
  }
  const BilateralSequence seq(spec);
  const auto size = static_cast<std::size_t>(r);
  ExactMatrix matrix(size, size);
  for (std::size_t t = 0; t < size; ++t) {
    for (std::size_t c = 0; c < size; ++c) matrix(t, c) = seq.term(static_cast<long>(t) + deltas[c]);
  }
  std::vector<Rational> rhs(size, Rational(0));
  rhs.back() = Rational(1);
  return {std::move(matrix), std::move(rhs), parity, std::move(shifts), std::move(deltas)};
}

IrsRepresentation solve_toeplitz(const ToeplitzSystem& system) {
  std::vector<Rational> c;
  try {
    c = solve(system.matrix, system.rhs);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::singular_system) throw;
    throw Error(ErrorCode::singular_system,
                "Toeplitz matrix is singular (determinant 0): the impulse response has no unique "
                "representation in terms of this sequence");
  }
  IrsRepresentation rep;
  for (std::size_t i = 0; i < c.size(); ++i) rep.terms.push_back({system.deltas[i], c[i]});
  return rep;
}

std::string IrsRepresentation::to_string() const {
  std::string out = "F~_n =";
  bool first = true;
  for (const auto& t : terms) {
    out += first ? " " : " + ";
    first = false;
    out += "(" + t.c.to_string() + ")*" + index_label(t.delta);
  }
  if (first) out += " 0";
  return out;
}

std::string IrsRepresentation::to_signed_string() const {
  std::string out = "F~_n =";
  bool first = true;
  for (const auto& t : terms) {
    if (t.c.is_zero()) continue;
    if (first) {
      out += t.c.sign() < 0 ? " -" : " ";
    } else {
      out += t.c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.c);
    if (mag != Rational(1)) out += "(" + mag.to_string() + ")";
    out += index_label(t.delta);
  }
  if (first) out += " 0";
  return out;
}

std::pair<Rational, Rational> order2_coefficients(const SequenceSpec& spec) {
  require_order2(spec, "order2_coefficients");
  const Rational& a0 = spec.a(0);
  const Rational& a1 = spec.a(1);
  const Rational& p1 = spec.p(1);
  const Rational& p2 = spec.p(2);
  if (p1.is_zero()) throw Error(ErrorCode::precondition_failed, "order2_coefficients requires p_1 != 0");
  const Rational d = a1 * a1 - a0 * a1 * p1 - a0 * a0 * p2;
  if (d.is_zero()) {
    throw Error(ErrorCode::precondition_failed, "order2_coefficients requires a_1^2 - a_0 a_1 p_1 - a_0^2 p_2 != 0");
  }
  return {(a1 - a0 * p1) / (p1 * d), -(a1 * p2) / (p1 * d)};
}

bool is_nontrivial_basis(const SequenceSpec& b1, const SequenceSpec& b2) {
  require_order2(b1, "is_nontrivial_basis");
  if (b1.coefficients() != b2.coefficients()) {
    throw Error(ErrorCode::invalid_argument, "basis sequences must share one coefficient set");
  }
  const Rational det = b1.a(0) * b2.a(1) - b2.a(0) * b1.a(1);
  if (det.is_zero()) return false;
  const Rational shifted = Rational(1) / b1.p(2);
  auto is_shift = [&](const SequenceSpec& s) { return s.a(1).is_zero() && s.a(0) == shifted; };
  return !is_shift(b1) && !is_shift(b2);
}

std::pair<Rational, Rational> decompose_in_basis(const SequenceSpec& target, const SequenceSpec& b1,
                                                 const SequenceSpec& b2) {
  require_order2(target, "decompose_in_basis");
  require_order2(b1, "decompose_in_basis");
  if (b1.coefficients() != b2.coefficients() || target.coefficients() != b1.coefficients()) {
    throw Error(ErrorCode::invalid_argument, "basis and target must share one coefficient set");
  }
  ExactMatrix m(2, 2);
  m(0, 0) = b1.a(0);
  m(0, 1) = b2.a(0);
  m(1, 0) = b1.a(1);
  m(1, 1) = b2.a(1);
  const std::vector<Rational> rhs{target.a(0), target.a(1)};
  const auto c = solve(m, rhs);
  return {c[0], c[1]};
}

}  // namespace lrs
