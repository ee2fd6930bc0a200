#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrs/rational.hpp"
#include "lrs/sequence.hpp"

namespace lrs {

/// Order-2 sequence a_{n+1} = p1 a_n + p2 a_{n-1} extended to every integer
/// index (p2 != 0). Thread-safe memoization in both directions.
class BilateralOrder2 {
 public:
  /// Throws Error(zero_leading_coefficient) when p2 == 0.
  BilateralOrder2(Rational p1, Rational p2, Rational a0, Rational a1);
  explicit BilateralOrder2(const SequenceSpec& spec);
  /// The impulse response: a_0 = 0, a_1 = 1.
  static BilateralOrder2 irs(Rational p1, Rational p2);

  BilateralOrder2(const BilateralOrder2& other);
  BilateralOrder2& operator=(const BilateralOrder2&) = delete;

  const Rational& p1() const { return p1_; }
  const Rational& p2() const { return p2_; }
  Rational term(long n) const;
  Rational operator()(long n) const { return term(n); }

 private:
  Rational p1_;
  Rational p2_;
  mutable std::mutex mutex_;
  mutable std::vector<Rational> forward_;   // a_0, a_1, ...
  mutable std::vector<Rational> backward_;  // a_{-1}, a_{-2}, ...
};

using BilateralIRS2 = BilateralOrder2;

struct Counterexample {
  std::string parameters;
  Rational lhs;
  Rational rhs;
};

struct IdentityVerdict {
  std::string identity;
  std::string ranges;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;

  /// Adds another verdict's cases; keeps the first counterexample.
  void absorb(const IdentityVerdict& other);
  /// "PASS (735 cases)" or "FAIL at m=3, n=0, r=4: lhs=... rhs=..."
  std::string summary() const;
};

/// Inclusive integer range "lo..hi".
struct IntRange {
  long lo = 0;
  long hi = 0;
  /// Accepts "lo..hi" or a single integer. Throws Error(parse_error).
  static IntRange parse(std::string_view text);
  std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  std::string to_string() const;
};

/// F~_{m+r} = F~_m F~_{r+1} + p2 F~_{m-1} F~_r.  m >= 0, any r.
IdentityVerdict addition_formula(const BilateralIRS2& irs, long m, long r);

/// F~_{r+mn} = sum_{j=0}^n C(n,j) F~_m^j (p2 F~_{m-1})^{n-j} F~_{r+j}.
/// m, n >= 0, any r.
IdentityVerdict nonlinear_expansion(const BilateralIRS2& irs, long m, long n, long r);

/// The three negative-index consequences of the expansion (r = -mn-1, -mn,
/// -mn+1), with right-hand sides 1, 0, 1.  m >= 1, n >= 0.
IdentityVerdict negative_index_suite(const BilateralIRS2& irs, long m, long n);

/// The expansion at m = 2, 3, 4 written with F~_2 = p1, F~_3 = p1^2 + p2,
/// F~_4 = p1 (p1^2 + 2 p2).  n >= 0, any r.
IdentityVerdict small_m_suite(const BilateralIRS2& irs, long n, long r);

/// The m = 2, 3, 4 identities carried to an arbitrary order-2 sequence by
/// substituting c a_{r+j-1} + d a_{r+j-2} for F~_{r+j}, with (c, d) from
/// `order2_coefficients`.
IdentityVerdict transfer_suite(const SequenceSpec& spec, long n, long r);

/// F~_{mn+r} == (p2 F~_{m-1})^n F~_r + F~_m^n F~_{n+r}  (mod F~_{m-1} F~_m),
/// and F~_{mn} == 0 (mod F~_m F~_n) whenever gcd(F~_m, F~_n) = 1.
/// A zero modulus means exact equality. Requires integer p1, p2, m >= 1,
/// n >= 0, r >= 0; throws Error(non_integer) / Error(precondition_failed).
IdentityVerdict congruence_suite(const BilateralIRS2& irs, long m, long n, long r);

/// F~_{m_1 ... m_s} == 0 (mod F~_{m_1} ... F~_{m_s}) for pairwise coprime
/// F~_{m_k}. Passes vacuously (zero cases) when the coprimality precondition
/// fails.
IdentityVerdict congruence_product(const BilateralIRS2& irs, std::span<const long> ms);

enum class IdentityFamily { addition, nonlinear, negative, small_m, transfer, congruence };

/// Parses "addition", "nonlinear", "negative", "small-m", "transfer",
/// "congruence". Throws Error(unknown_identity).
IdentityFamily parse_family(std::string_view name);
std::string_view to_string(IdentityFamily family);

/// Runs one family over the Cartesian product of the ranges it uses
/// (addition: m, r; negative: m, n; small-m and transfer: n, r; the others
/// m, n, r). The impulse response comes from spec's coefficients; transfer
/// uses the spec itself.
IdentityVerdict sweep(IdentityFamily family, const SequenceSpec& spec, IntRange m, IntRange n, IntRange r);

/// b_n = a_n - k with k = ell / (1 - p - q) turns a_n = p a_{n-1} + q a_{n-2} + ell
/// into a homogeneous recurrence. With q == 0 the result has order 1 and a1
/// must satisfy a1 = p a0 + ell.
struct NonhomogeneousReduction {
  SequenceSpec homogeneous;
  Rational shift;  // k: a_n = b_n + k
};
/// Throws Error(precondition_failed) when p + q == 1 or the order-1
/// initials are inconsistent.
NonhomogeneousReduction nonhomogeneous_reduce(const Rational& p, const Rational& q, const Rational& ell,
                                              const Rational& a0, const Rational& a1);

/// Catalogued closed identity over one index n (arity 1) or two indices m, n
/// (arity 2). `holds` is false for printed variants that are known not to
/// hold; they are kept so the discrepancy stays checkable.
struct NamedIdentity {
  std::string name;
  std::string statement;
  int arity = 1;
  long min_index = 0;
  bool holds = true;
  std::function<std::pair<Rational, Rational>(long m, long n)> sides;
};

const std::vector<NamedIdentity>& named_identity_catalog();
const NamedIdentity& find_named_identity(std::string_view name);

/// Checks the named identity for every index in `window` at or above its
/// minimum (both indices range over the window for arity 2).
/// Throws Error(unknown_identity) for names not in the catalog.
IdentityVerdict named_identity_suite(std::string_view name, IntRange window);

}  // namespace lrs
