#include "lrs/identities.hpp"

#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

#include "lrs/error.hpp"
#include "lrs/irs_algebra.hpp"

namespace lrs {

BilateralOrder2::BilateralOrder2(Rational p1, Rational p2, Rational a0, Rational a1)
    : p1_(std::move(p1)), p2_(std::move(p2)), forward_{std::move(a0), std::move(a1)} {
  if (p2_.is_zero()) throw Error(ErrorCode::zero_leading_coefficient, "p2 must be nonzero");
}

BilateralOrder2::BilateralOrder2(const SequenceSpec& spec)
    : BilateralOrder2(spec.order() == 2 ? spec.p(1) : Rational(0), spec.order() == 2 ? spec.p(2) : Rational(0),
                      spec.initials()[0], spec.order() == 2 ? spec.a(1) : Rational(0)) {
  if (spec.order() != 2) throw Error(ErrorCode::precondition_failed, "bilateral order-2 sequence needs order 2");
}

BilateralOrder2 BilateralOrder2::irs(Rational p1, Rational p2) {
  return BilateralOrder2(std::move(p1), std::move(p2), Rational(0), Rational(1));
}

BilateralOrder2::BilateralOrder2(const BilateralOrder2& other) : p1_(other.p1_), p2_(other.p2_) {
  std::lock_guard lock(other.mutex_);
  forward_ = other.forward_;
  backward_ = other.backward_;
}

Rational BilateralOrder2::term(long n) const {
  std::lock_guard lock(mutex_);
  if (n >= 0) {
    const auto idx = static_cast<std::size_t>(n);
    while (forward_.size() <= idx) {
      const std::size_t k = forward_.size();
      forward_.push_back(p1_ * forward_[k - 1] + p2_ * forward_[k - 2]);
    }
    return forward_[idx];
  }
  const auto idx = static_cast<std::size_t>(-n - 1);
  auto at = [&](long k) -> const Rational& {
    return k >= 0 ? forward_[static_cast<std::size_t>(k)] : backward_[static_cast<std::size_t>(-k - 1)];
  };
  while (backward_.size() <= idx) {
    // a_{k-1} = (a_{k+1} - p1 a_k) / p2 with k = -size
    const long k = -static_cast<long>(backward_.size());
    backward_.push_back((at(k + 1) - p1_ * at(k)) / p2_);
  }
  return backward_[idx];
}

void IdentityVerdict::absorb(const IdentityVerdict& other) {
  cases += other.cases;
  if (!other.passed && passed) {
    passed = false;
    counterexample = other.counterexample;
  }
}

std::string IdentityVerdict::summary() const {
  std::ostringstream os;
  if (passed) {
    os << "PASS (" << cases << " cases)";
  } else {
    os << "FAIL at " << counterexample->parameters << ": lhs=" << counterexample->lhs
       << " rhs=" << counterexample->rhs;
  }
  return os.str();
}

IntRange IntRange::parse(std::string_view text) {
  auto number = [&](std::string_view s) {
    long v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw Error(ErrorCode::parse_error, "bad range '" + std::string(text) + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const long v = number(text);
    return {v, v};
  }
  const IntRange r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  if (r.hi < r.lo) throw Error(ErrorCode::parse_error, "empty range '" + std::string(text) + "'");
  return r;
}

std::string IntRange::to_string() const {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

namespace {

IdentityVerdict start(std::string identity, std::string ranges) {
  IdentityVerdict v;
  v.identity = std::move(identity);
  v.ranges = std::move(ranges);
  v.cases = 1;
  return v;
}

void check(IdentityVerdict& v, const std::string& where, const Rational& lhs, const Rational& rhs) {
  if (v.passed && lhs != rhs) {
    v.passed = false;
    v.counterexample = Counterexample{where, lhs, rhs};
  }
}

std::string params(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s;
  for (const auto& [k, val] : kv) {
    if (!s.empty()) s += ", ";
    s += k;
    s += '=';
    s += std::to_string(val);
  }
  return s;
}

// sum_{j=0}^n C(n,j) x^j y^{n-j} f(j)
template <class F>
Rational binomial_sum(long n, const Rational& x, const Rational& y, F&& f) {
  Rational sum(0);
  for (long j = 0; j <= n; ++j) sum += Rational(binomial(n, j)) * pow(x, j) * pow(y, n - j) * f(j);
  return sum;
}

BigInt to_integer(const Rational& q) {
  if (!q.is_integer()) throw Error(ErrorCode::non_integer, "non-integer value " + q.to_string());
  return q.numerator();
}

BigInt mod_abs(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

// a == b (mod m); m == 0 means equality. lhs/rhs are reported as residues.
void check_congruence(IdentityVerdict& v, const std::string& where, const BigInt& a, const BigInt& b,
                      const BigInt& m) {
  if (m == 0) {
    check(v, where + " (mod 0)", Rational(a), Rational(b));
    return;
  }
  check(v, where + " (mod " + m.get_str() + ")", Rational(mod_abs(a, m)), Rational(mod_abs(b, m)));
}

void require_integer_irs(const BilateralIRS2& irs) {
  if (!irs.p1().is_integer() || !irs.p2().is_integer())
    throw Error(ErrorCode::non_integer, "congruences need integer p1, p2");
}

}  // namespace

IdentityVerdict addition_formula(const BilateralIRS2& irs, long m, long r) {
  if (m < 0) throw Error(ErrorCode::precondition_failed, "addition formula needs m >= 0");
  auto v = start("addition", params({{"m", m}, {"r", r}}));
  const auto& F = irs;
  check(v, v.ranges, F(m + r), F(m) * F(r + 1) + irs.p2() * F(m - 1) * F(r));
  return v;
}

IdentityVerdict nonlinear_expansion(const BilateralIRS2& irs, long m, long n, long r) {
  if (m < 0 || n < 0) throw Error(ErrorCode::precondition_failed, "nonlinear expansion needs m, n >= 0");
  auto v = start("nonlinear", params({{"m", m}, {"n", n}, {"r", r}}));
  const auto& F = irs;
  const Rational rhs = binomial_sum(n, F(m), irs.p2() * F(m - 1), [&](long j) { return F(r + j); });
  check(v, v.ranges, F(r + m * n), rhs);
  return v;
}

IdentityVerdict negative_index_suite(const BilateralIRS2& irs, long m, long n) {
  if (m < 1 || n < 0) throw Error(ErrorCode::precondition_failed, "negative-index identities need m >= 1, n >= 0");
  auto v = start("negative", params({{"m", m}, {"n", n}}));
  const auto& F = irs;
  const Rational& p2 = irs.p2();
  const Rational x = F(m);
  const Rational y = p2 * F(m - 1);
  const long mn = m * n;
  check(v, v.ranges + " (r=-mn-1)", p2 * binomial_sum(n, x, y, [&](long j) { return F(j - mn - 1); }), Rational(1));
  check(v, v.ranges + " (r=-mn)", binomial_sum(n, x, y, [&](long j) { return F(j - mn); }), Rational(0));
  check(v, v.ranges + " (r=-mn+1)", binomial_sum(n, x, y, [&](long j) { return F(j - mn + 1); }), Rational(1));
  return v;
}

namespace {

// Weights (x, y) of the m = 2, 3, 4 specializations written in p1, p2.
std::array<std::pair<Rational, Rational>, 3> small_m_weights(const Rational& p, const Rational& q) {
  return {{{p, q}, {p * p + q, p * q}, {p * (p * p + Rational(2) * q), q * (p * p + q)}}};
}

}  // namespace

IdentityVerdict small_m_suite(const BilateralIRS2& irs, long n, long r) {
  if (n < 0) throw Error(ErrorCode::precondition_failed, "small-m identities need n >= 0");
  auto v = start("small-m", params({{"n", n}, {"r", r}}));
  const auto& F = irs;
  const auto w = small_m_weights(irs.p1(), irs.p2());
  for (long m = 2; m <= 4; ++m) {
    const auto& [x, y] = w[static_cast<std::size_t>(m - 2)];
    check(v, v.ranges + " (m=" + std::to_string(m) + ")", binomial_sum(n, x, y, [&](long j) { return F(r + j); }),
          F(r + m * n));
  }
  return v;
}

IdentityVerdict transfer_suite(const SequenceSpec& spec, long n, long r) {
  if (spec.order() != 2) throw Error(ErrorCode::precondition_failed, "transfer identities need order 2");
  if (n < 0) throw Error(ErrorCode::precondition_failed, "transfer identities need n >= 0");
  const auto [c, d] = order2_coefficients(spec);
  const BilateralOrder2 a(spec);
  auto G = [&](long k) { return c * a(k - 1) + d * a(k - 2); };
  auto v = start("transfer", params({{"n", n}, {"r", r}}));
  const auto w = small_m_weights(spec.p(1), spec.p(2));
  for (long m = 2; m <= 4; ++m) {
    const auto& [x, y] = w[static_cast<std::size_t>(m - 2)];
    check(v, v.ranges + " (m=" + std::to_string(m) + ")", binomial_sum(n, x, y, [&](long j) { return G(r + j); }),
          G(r + m * n));
  }
  return v;
}

IdentityVerdict congruence_suite(const BilateralIRS2& irs, long m, long n, long r) {
  require_integer_irs(irs);
  if (m < 1 || n < 0 || r < 0)
    throw Error(ErrorCode::precondition_failed, "congruences need m >= 1, n >= 0, r >= 0");
  auto v = start("congruence", params({{"m", m}, {"n", n}, {"r", r}}));
  auto F = [&](long k) { return to_integer(irs(k)); };
  const BigInt p2 = to_integer(irs.p2());
  const BigInt fm = F(m);
  const BigInt fm1 = F(m - 1);

  BigInt a;
  BigInt b;
  mpz_pow_ui(a.get_mpz_t(), BigInt(p2 * fm1).get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(b.get_mpz_t(), fm.get_mpz_t(), static_cast<unsigned long>(n));
  check_congruence(v, v.ranges, F(m * n + r), a * F(r) + b * F(n + r), fm1 * fm);

  const BigInt fn = F(n);
  if (gcd(fm, fn) == 1) check_congruence(v, v.ranges + " (coprime product)", F(m * n), 0, fm * fn);
  return v;
}

IdentityVerdict congruence_product(const BilateralIRS2& irs, std::span<const long> ms) {
  require_integer_irs(irs);
  IdentityVerdict v;
  v.identity = "congruence-product";
  long product = 1;
  std::vector<BigInt> values;
  for (const long m : ms) {
    if (m < 1) throw Error(ErrorCode::precondition_failed, "congruence product needs every m >= 1");
    if (!v.ranges.empty()) v.ranges += ",";
    v.ranges += std::to_string(m);
    product *= m;
    values.push_back(to_integer(irs(m)));
  }
  v.ranges = "m=(" + v.ranges + ")";
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (gcd(values[i], values[j]) != 1) return v;
  v.cases = 1;
  BigInt modulus = 1;
  for (const auto& x : values) modulus *= x;
  check_congruence(v, v.ranges, to_integer(irs(product)), 0, modulus);
  return v;
}

IdentityFamily parse_family(std::string_view name) {
  if (name == "addition") return IdentityFamily::addition;
  if (name == "nonlinear") return IdentityFamily::nonlinear;
  if (name == "negative") return IdentityFamily::negative;
  if (name == "small-m") return IdentityFamily::small_m;
  if (name == "transfer") return IdentityFamily::transfer;
  if (name == "congruence") return IdentityFamily::congruence;
  throw Error(ErrorCode::unknown_identity, "unknown identity family '" + std::string(name) + "'");
}

std::string_view to_string(IdentityFamily family) {
  switch (family) {
    case IdentityFamily::addition: return "addition";
    case IdentityFamily::nonlinear: return "nonlinear";
    case IdentityFamily::negative: return "negative";
    case IdentityFamily::small_m: return "small-m";
    case IdentityFamily::transfer: return "transfer";
    case IdentityFamily::congruence: return "congruence";
  }
  return "?";
}

IdentityVerdict sweep(IdentityFamily family, const SequenceSpec& spec, IntRange m, IntRange n, IntRange r) {
  if (spec.order() != 2) throw Error(ErrorCode::precondition_failed, "identity families need order 2");
  const auto irs = BilateralIRS2::irs(spec.p(1), spec.p(2));
  IdentityVerdict v;
  v.identity = std::string(to_string(family));
  auto each2 = [](IntRange a, IntRange b, auto&& f) {
    for (long x = a.lo; x <= a.hi; ++x)
      for (long y = b.lo; y <= b.hi; ++y) f(x, y);
  };
  switch (family) {
    case IdentityFamily::addition:
      v.ranges = "m=" + m.to_string() + ", r=" + r.to_string();
      each2(m, r, [&](long x, long y) { v.absorb(addition_formula(irs, x, y)); });
      break;
    case IdentityFamily::negative:
      v.ranges = "m=" + m.to_string() + ", n=" + n.to_string();
      each2(m, n, [&](long x, long y) { v.absorb(negative_index_suite(irs, x, y)); });
      break;
    case IdentityFamily::small_m:
      v.ranges = "n=" + n.to_string() + ", r=" + r.to_string();
      each2(n, r, [&](long x, long y) { v.absorb(small_m_suite(irs, x, y)); });
      break;
    case IdentityFamily::transfer:
      v.ranges = "n=" + n.to_string() + ", r=" + r.to_string();
      each2(n, r, [&](long x, long y) { v.absorb(transfer_suite(spec, x, y)); });
      break;
    case IdentityFamily::nonlinear:
    case IdentityFamily::congruence:
      v.ranges = "m=" + m.to_string() + ", n=" + n.to_string() + ", r=" + r.to_string();
      for (long x = m.lo; x <= m.hi; ++x)
        each2(n, r, [&](long y, long z) {
          v.absorb(family == IdentityFamily::nonlinear ? nonlinear_expansion(irs, x, y, z)
                                                       : congruence_suite(irs, x, y, z));
        });
      break;
  }
  return v;
}

NonhomogeneousReduction nonhomogeneous_reduce(const Rational& p, const Rational& q, const Rational& ell,
                                              const Rational& a0, const Rational& a1) {
  const Rational denom = Rational(1) - p - q;
  if (denom.is_zero()) throw Error(ErrorCode::precondition_failed, "p + q = 1: no constant shift exists");
  const Rational k = ell / denom;
  if (q.is_zero()) {
    if (p.is_zero()) throw Error(ErrorCode::zero_leading_coefficient, "p and q are both zero");
    if (a1 != p * a0 + ell)
      throw Error(ErrorCode::precondition_failed, "a1 does not follow from a0 in the order-1 recurrence");
    return {SequenceSpec(CoefficientSet({p}), {a0 - k}), k};
  }
  return {SequenceSpec(CoefficientSet({p, q}), {a0 - k, a1 - k}), k};
}

}  // namespace lrs
