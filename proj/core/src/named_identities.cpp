#include <algorithm>
#include <memory>

#include "lrs/error.hpp"
#include "lrs/identities.hpp"

namespace lrs {

namespace {

using Sides = std::pair<Rational, Rational>;

struct Sequences {
  BilateralOrder2 fib = BilateralOrder2::irs(1, 1);
  BilateralOrder2 lucas{1, 1, 2, 1};
  BilateralOrder2 pell = BilateralOrder2::irs(2, 1);
  BilateralOrder2 jac = BilateralOrder2::irs(1, 2);
  BilateralOrder2 jac_lucas{1, 2, 2, 1};
  BilateralOrder2 mersenne_irs = BilateralOrder2::irs(3, -2);
  BilateralOrder2 nzm_g = BilateralOrder2::irs(3, 5);
  BilateralOrder2 nzm_h{3, 5, 2, 3};
  BilateralOrder2 fib_like{1, 1, 3, 7};
  BilateralSequence trib{make_irs(CoefficientSet({1, 1, 1}))};
  BilateralSequence trib_like{SequenceSpec(CoefficientSet({1, 1, 1}), {2, 1, 1})};
};

Rational two_pow(long n) { return pow(Rational(2), n); }
Rational minus_one_pow(long n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }
Rational mersenne(long k, long n) { return (pow(Rational(k), n) - Rational(1)) / Rational(k - 1); }

std::vector<NamedIdentity> build_catalog() {
  auto s = std::make_shared<const Sequences>();
  std::vector<NamedIdentity> c;
  auto add1 = [&](std::string name, std::string statement, long min_n, auto f, bool holds = true) {
    c.push_back({std::move(name), std::move(statement), 1, min_n, holds,
                 [s, f](long, long n) -> Sides { return f(*s, n); }});
  };
  auto add2 = [&](std::string name, std::string statement, long min_index, auto f, bool holds = true) {
    c.push_back({std::move(name), std::move(statement), 2, min_index, holds,
                 [s, f](long m, long n) -> Sides { return f(*s, m, n); }});
  };

  // Fibonacci and Lucas
  add1("carlitz", "F[n+1] L[n+2] - F[n+2] L[n] = F[2n+1]", 0, [](const Sequences& q, long n) {
    const auto& F = q.fib;
    const auto& L = q.lucas;
    return Sides{F(n + 1) * L(n + 2) - F(n + 2) * L(n), F(2 * n + 1)};
  });
  add1("fibonacci-product", "F[n+1] F[n+2] - F[n-1] F[n] = F[2n+1]", 0, [](const Sequences& q, long n) {
    const auto& F = q.fib;
    return Sides{F(n + 1) * F(n + 2) - F(n - 1) * F(n), F(2 * n + 1)};
  });
  add1("lucas-squares", "L[n+1]^2 + L[n]^2 = L[2n] + L[2n+2]", 0, [](const Sequences& q, long n) {
    const auto& L = q.lucas;
    return Sides{L(n + 1) * L(n + 1) + L(n) * L(n), L(2 * n) + L(2 * n + 2)};
  });
  add1("lucas-from-fibonacci", "L[n] = F[n] + 2 F[n-1]", 0, [](const Sequences& q, long n) {
    return Sides{q.lucas(n), q.fib(n) + Rational(2) * q.fib(n - 1)};
  });
  add1("lucas-from-fibonacci-symmetric", "L[n] = F[n+1] + F[n-1]", 0, [](const Sequences& q, long n) {
    return Sides{q.lucas(n), q.fib(n + 1) + q.fib(n - 1)};
  });
  add1("fibonacci-from-lucas", "F[n] = (1/5) L[n-1] + (1/5) L[n+1]", 0, [](const Sequences& q, long n) {
    return Sides{q.fib(n), Rational(1, 5) * q.lucas(n - 1) + Rational(1, 5) * q.lucas(n + 1)};
  });
  add1("fibonacci-lucas-basis", "a[n] = (a1 - a0/2) F[n] + (a0/2) L[n] for a = (3, 7, ...)", 0,
       [](const Sequences& q, long n) {
         const Rational a0 = 3;
         const Rational a1 = 7;
         return Sides{q.fib_like(n), (a1 - a0 / Rational(2)) * q.fib(n) + a0 / Rational(2) * q.lucas(n)};
       });

  // Jacobsthal and Jacobsthal-Lucas
  add1("jacobsthal-closed", "J[n] = (2^n - (-1)^n) / 3", 0, [](const Sequences& q, long n) {
    return Sides{q.jac(n), (two_pow(n) - minus_one_pow(n)) / Rational(3)};
  });
  add1("jacobsthal-lucas", "j[n] = J[n] + 4 J[n-1]", 0, [](const Sequences& q, long n) {
    return Sides{q.jac_lucas(n), q.jac(n) + Rational(4) * q.jac(n - 1)};
  });
  add1("jacobsthal-lucas-closed", "j[n] = 2^n + (-1)^n", 0, [](const Sequences& q, long n) {
    return Sides{q.jac_lucas(n), two_pow(n) + minus_one_pow(n)};
  });
  add1("jacobsthal-lucas-shift", "j[n] = J[n+1] + 2 J[n-1]", 0, [](const Sequences& q, long n) {
    return Sides{q.jac_lucas(n), q.jac(n + 1) + Rational(2) * q.jac(n - 1)};
  });
  add1("jacobsthal-square", "J[n]^2 + 4 J[n-1] J[n] = J[2n]", 0, [](const Sequences& q, long n) {
    const auto& J = q.jac;
    return Sides{J(n) * J(n) + Rational(4) * J(n - 1) * J(n), J(2 * n)};
  });
  add1("jacobsthal-lucas-product", "j[n] J[n] = J[2n]", 0, [](const Sequences& q, long n) {
    return Sides{q.jac_lucas(n) * q.jac(n), q.jac(2 * n)};
  });
  add2("jacobsthal-difference", "J[m] J[n-1] - J[n] J[m-1] = (-1)^n 2^(n-1) J[m-n]", 0,
       [](const Sequences& q, long m, long n) {
         const auto& J = q.jac;
         return Sides{J(m) * J(n - 1) - J(n) * J(m - 1), minus_one_pow(n) * two_pow(n - 1) * J(m - n)};
       });
  add2("jacobsthal-lucas-difference", "J[m] j[n] - J[n] j[m] = (-1)^n 2^(n+1) J[m-n]", 0,
       [](const Sequences& q, long m, long n) {
         const auto& J = q.jac;
         const auto& j = q.jac_lucas;
         return Sides{J(m) * j(n) - J(n) * j(m), minus_one_pow(n) * two_pow(n + 1) * J(m - n)};
       });
  add2("jacobsthal-addition", "J[m] J[n] + 2 J[m] J[n-1] + 2 J[n] J[m-1] = J[m+n]", 0,
       [](const Sequences& q, long m, long n) {
         const auto& J = q.jac;
         return Sides{J(m) * J(n) + Rational(2) * J(m) * J(n - 1) + Rational(2) * J(n) * J(m - 1), J(m + n)};
       });
  add2("jacobsthal-lucas-sum", "J[m] j[n] + J[n] j[m] = 2 J[m+n]", 0, [](const Sequences& q, long m, long n) {
    const auto& J = q.jac;
    const auto& j = q.jac_lucas;
    return Sides{J(m) * j(n) + J(n) * j(m), Rational(2) * J(m + n)};
  });
  add2(
      "jacobsthal-lucas-sum-minus", "J[m] j[n] - J[n] j[m] = 2 J[m+n]", 0,
      [](const Sequences& q, long m, long n) {
        const auto& J = q.jac;
        const auto& j = q.jac_lucas;
        return Sides{J(m) * j(n) - J(n) * j(m), Rational(2) * J(m + n)};
      },
      false);

  // Mersenne and the nonhomogeneous forms
  add1("mersenne-homogeneous", "M[n] = 3 M[n-1] - 2 M[n-2], M[n] = 2^n - 1", 2, [](const Sequences&, long n) {
    return Sides{mersenne(2, n), Rational(3) * mersenne(2, n - 1) - Rational(2) * mersenne(2, n - 2)};
  });
  add1("mersenne-nonhomogeneous", "M[n] = 2 M[n-1] + 1, M[n] = 2^n - 1", 1, [](const Sequences&, long n) {
    return Sides{mersenne(2, n), Rational(2) * mersenne(2, n - 1) + Rational(1)};
  });
  add1("mersenne-irs", "2^n - 1 is the impulse response of (3, -2)", 0, [](const Sequences& q, long n) {
    return Sides{mersenne(2, n), q.mersenne_irs(n)};
  });
  add1("mersenne-reduction", "2^n - 1 = b[n] + k from reducing M[n] = 2 M[n-1] + 1", 0, [](const Sequences&, long n) {
    const auto red = nonhomogeneous_reduce(2, 0, 1, 0, 1);
    const BilateralSequence b(red.homogeneous);
    return Sides{mersenne(2, n), b.term(n) + red.shift};
  });
  add2("mersenne-general-homogeneous", "(k^n - 1)/(k - 1) obeys M[n] = (k+1) M[n-1] - k M[n-2], k = m >= 2", 2,
       [](const Sequences&, long k, long n) {
         return Sides{mersenne(k, n), Rational(k + 1) * mersenne(k, n - 1) - Rational(k) * mersenne(k, n - 2)};
       });
  add2("mersenne-general-nonhomogeneous", "(k^n - 1)/(k - 1) obeys M[n] = k M[n-1] + 1, k = m >= 2", 2,
       [](const Sequences&, long k, long n) {
         return Sides{mersenne(k, n), Rational(k) * mersenne(k, n - 1) + Rational(1)};
       });
  add1("pell-nonhomogeneous", "Q[n] = 2 Q[n-1] + Q[n-2] + 1 for Q[n] = P[n] - 1/2", 2, [](const Sequences& q, long n) {
    auto Q = [&](long k) { return q.pell(k) - Rational(1, 2); };
    return Sides{Q(n), Rational(2) * Q(n - 1) + Q(n - 2) + Rational(1)};
  });
  add1("nzm-h-from-g", "H[n] = p G[n] + 2q G[n-1], (p, q) = (3, 5)", 0, [](const Sequences& q, long n) {
    return Sides{q.nzm_h(n), Rational(3) * q.nzm_g(n) + Rational(10) * q.nzm_g(n - 1)};
  });
  add1("nzm-g-from-h", "G[n] = q/(p^2+4q) H[n-1] + 1/(p^2+4q) H[n+1], (p, q) = (3, 5)", 0,
       [](const Sequences& q, long n) {
         return Sides{q.nzm_g(n), Rational(5, 29) * q.nzm_h(n - 1) + Rational(1, 29) * q.nzm_h(n + 1)};
       });

  // Tribonacci
  add1("tribonacci-shift", "T[n] = 2 T[n-1] - T[n-4]", 4, [](const Sequences& q, long n) {
    const auto& T = q.trib;
    return Sides{T.term(n), Rational(2) * T.term(n - 1) - T.term(n - 4)};
  });
  add1("tribonacci-like-representation", "a[n] = a2 T[n] + (a0 + a1) T[n-1] + a1 T[n-2], a = (2, 1, 1, ...)", 0,
       [](const Sequences& q, long n) {
         const auto& T = q.trib;
         return Sides{q.trib_like.term(n), T.term(n) + Rational(3) * T.term(n - 1) + T.term(n - 2)};
       });
  add1("tribonacci-like-toeplitz", "T[n] = (6/19) a[n+1] - (4/19) a[n] - (1/19) a[n-1], a = (2, 1, 1, ...)", 0,
       [](const Sequences& q, long n) {
         const auto& a = q.trib_like;
         return Sides{q.trib.term(n),
                      Rational(6, 19) * a.term(n + 1) - Rational(4, 19) * a.term(n) - Rational(1, 19) * a.term(n - 1)};
       });
  add1("tribonacci-like-7term",
       "6 a[n+1] - 16 a[n] + 7 a[n-1] + 2 a[n-2] + 6 a[n-3] - 4 a[n-4] - a[n-5] = 0, a = (2, 1, 1, ...)", 5,
       [](const Sequences& q, long n) {
         const auto& a = q.trib_like;
         const Rational lhs = Rational(6) * a.term(n + 1) - Rational(16) * a.term(n) + Rational(7) * a.term(n - 1) +
                              Rational(2) * a.term(n - 2) + Rational(6) * a.term(n - 3) -
                              Rational(4) * a.term(n - 4) - a.term(n - 5);
         return Sides{lhs, Rational(0)};
       });
  add1("tribonacci-7term", "T[n] + T[n-1] - 5 T[n-2] - 2 T[n-3] + T[n-4] + 3 T[n-5] + T[n-6] = 0", 6,
       [](const Sequences& q, long n) {
         const auto& T = q.trib;
         const Rational lhs = T.term(n) + T.term(n - 1) - Rational(5) * T.term(n - 2) - Rational(2) * T.term(n - 3) +
                              T.term(n - 4) + Rational(3) * T.term(n - 5) + T.term(n - 6);
         return Sides{lhs, Rational(0)};
       });
  return c;
}

}  // namespace

const std::vector<NamedIdentity>& named_identity_catalog() {
  static const std::vector<NamedIdentity> catalog = build_catalog();
  return catalog;
}

const NamedIdentity& find_named_identity(std::string_view name) {
  for (const auto& id : named_identity_catalog())
    if (id.name == name) return id;
  throw Error(ErrorCode::unknown_identity, "no identity named '" + std::string(name) + "'");
}

IdentityVerdict named_identity_suite(std::string_view name, IntRange window) {
  const auto& id = find_named_identity(name);
  IdentityVerdict v;
  v.identity = id.name;
  const long lo = std::max(window.lo, id.min_index);
  const IntRange used{lo, window.hi};
  v.ranges = (id.arity == 2 ? "m, n=" : "n=") + used.to_string();
  auto one = [&](long m, long n) {
    const auto [lhs, rhs] = id.sides(m, n);
    ++v.cases;
    if (v.passed && lhs != rhs) {
      v.passed = false;
      v.counterexample = Counterexample{id.arity == 2 ? "m=" + std::to_string(m) + ", n=" + std::to_string(n)
                                                      : "n=" + std::to_string(n),
                                        lhs, rhs};
    }
  };
  for (long x = used.lo; x <= used.hi; ++x) {
    if (id.arity == 1) {
      one(0, x);
    } else {
      for (long y = used.lo; y <= used.hi; ++y) one(x, y);
    }
  }
  return v;
}

}  // namespace lrs
