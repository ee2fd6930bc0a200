#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lrs/identities.hpp"
#include "oracles.hpp"

using namespace lrs;
using testing::error_code_of;
using testing::ints;

namespace {

const BilateralIRS2 fib = BilateralIRS2::irs(1, 1);
const BilateralIRS2 pell = BilateralIRS2::irs(2, 1);
const BilateralIRS2 jac = BilateralIRS2::irs(1, 2);

}  // namespace

TEST_CASE("bilateral order-2 values") {
  CHECK(fib(-1) == Rational(1));
  CHECK(fib(-2) == Rational(-1));
  CHECK(fib(-3) == Rational(2));
  CHECK(pell(-2) == Rational(-2));
  CHECK(pell(-3) == Rational(5));
  CHECK(jac(-1) == Rational(1, 2));
  CHECK(jac(-2) == Rational(-1, 4));
  CHECK(jac(-3) == Rational(3, 8));
  CHECK(error_code_of([] { BilateralIRS2::irs(1, 0); }) == ErrorCode::zero_leading_coefficient);
  // the backward values re-run forward
  for (long n = -40; n < 40; ++n) CHECK(jac(n + 1) == jac(n) + Rational(2) * jac(n - 1));
  const BilateralIRS2 copy(jac);
  CHECK(copy(-30) == jac(-30));
}

TEST_CASE("addition formula") {
  CHECK(addition_formula(fib, 5, 5).passed);
  CHECK(fib(10) == Rational(55));
  CHECK(addition_formula(jac, 3, -2).passed);
  for (long r = -10; r <= 10; ++r) CHECK(addition_formula(pell, 1, r).passed);
  CHECK(error_code_of([] { addition_formula(fib, -1, 0); }) == ErrorCode::precondition_failed);
}

TEST_CASE("nonlinear expansion") {
  CHECK(nonlinear_expansion(fib, 3, 2, 1).passed);
  CHECK(nonlinear_expansion(pell, 2, 3, 0).passed);
  CHECK(pell(6) == Rational(70));
  CHECK(nonlinear_expansion(fib, 7, 0, -4).passed);
  CHECK(nonlinear_expansion(fib, 3, 2, 1).cases == 1);
}

TEST_CASE("expansion at n = 1 is the addition formula") {
  for (long m = 0; m <= 6; ++m)
    for (long r = -6; r <= 6; ++r) {
      const Rational lhs = fib(m + r);
      const Rational expansion = fib(m - 1) * fib(r) + fib(m) * fib(r + 1);
      CHECK(lhs == expansion);
      CHECK(nonlinear_expansion(fib, m, 1, r).passed == addition_formula(fib, m, r).passed);
    }
}

TEST_CASE("negative-index identities") {
  CHECK(negative_index_suite(fib, 2, 3).passed);
  CHECK(negative_index_suite(jac, 3, 2).passed);
  CHECK(negative_index_suite(pell, 1, 0).passed);
  CHECK(error_code_of([] { negative_index_suite(fib, 0, 1); }) == ErrorCode::precondition_failed);
}

TEST_CASE("small-m and transfer families") {
  CHECK(small_m_suite(fib, 2, 0).passed);
  CHECK(small_m_suite(pell, 3, 1).passed);
  CHECK(pell(7) == Rational(169));
  const SequenceSpec lucas(CoefficientSet(ints({1, 1})), ints({2, 1}));
  CHECK(transfer_suite(lucas, 2, 3).passed);
  const SequenceSpec jl(CoefficientSet(ints({1, 2})), ints({2, 1}));
  CHECK(transfer_suite(jl, 1, 2).passed);
  CHECK(transfer_suite(make_irs(CoefficientSet(ints({1, 1}))), 4, -3).passed);
  CHECK(error_code_of([] { transfer_suite(make_irs(CoefficientSet(ints({1, 1, 1}))), 1, 1); }) ==
        ErrorCode::precondition_failed);
}

TEST_CASE("congruences") {
  const auto v = congruence_suite(fib, 3, 4, 0);
  CHECK(fib(12) == Rational(144));
  // (0.7) part: F_12 divisible by F_3 F_4 = 6
  const long ms[] = {3, 4, 5};
  const auto prod = congruence_product(fib, ms);
  CHECK(prod.passed);
  CHECK(prod.cases == 1);
  CHECK(mpz_divisible_ui_p(fib(60).numerator().get_mpz_t(), 30));
  // m = 1: modulus F_0 F_1 = 0 means equality
  CHECK(congruence_suite(fib, 1, 3, 2).passed);
  for (long m = 2; m <= 6; ++m)
    for (long n = 1; n <= 6; ++n)
      for (long r = 0; r <= 10; ++r) CHECK(congruence_suite(pell, m, n, r).passed);
  CHECK(v.passed);
  CHECK(error_code_of([] { congruence_suite(BilateralIRS2::irs(Rational(1, 2), 1), 2, 2, 0); }) ==
        ErrorCode::non_integer);
  CHECK(error_code_of([] { congruence_suite(fib, 2, 2, -1); }) == ErrorCode::precondition_failed);
  const long shared[] = {3, 6};
  CHECK(congruence_product(fib, shared).cases == 0);
}

TEST_CASE("the printed congruence double-counts at n = 0") {
  // (p2 F_{m-1})^0 F_r + F_m^0 F_r = 2 F_r, which is not F_r modulo F_{m-1} F_m in general.
  const auto v = congruence_suite(fib, 3, 0, 4);
  REQUIRE_FALSE(v.passed);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->lhs == Rational(1));  // F_4 = 3 = 1 mod 2
  CHECK(v.counterexample->rhs == Rational(0));  // 6 = 0 mod 2
  CHECK(v.counterexample->lhs != v.counterexample->rhs);
}

TEST_CASE("coprime congruence agrees with direct divisibility") {
  for (long m = 1; m <= 12; ++m)
    for (long n = 1; n <= 12; ++n) {
      const BigInt fm = fib(m).numerator();
      const BigInt fn = fib(n).numerator();
      if (gcd(fm, fn) != 1) continue;
      const BigInt prod = fm * fn;
      CHECK(mpz_divisible_p(fib(m * n).numerator().get_mpz_t(), prod.get_mpz_t()) != 0);
      CHECK(congruence_suite(fib, m, n, 0).counterexample.has_value() == false);
    }
}

TEST_CASE("sweeps count their cases") {
  const SequenceSpec jac_spec = make_irs(CoefficientSet(ints({1, 2})));
  const auto v = sweep(IdentityFamily::nonlinear, jac_spec, {1, 5}, {0, 6}, {-10, 10});
  CHECK(v.passed);
  CHECK(v.cases == 735);
  CHECK(v.summary() == "PASS (735 cases)");
  CHECK(sweep(IdentityFamily::addition, jac_spec, {0, 3}, {0, 0}, {-2, 2}).cases == 20);
  CHECK(sweep(IdentityFamily::negative, jac_spec, {1, 3}, {0, 4}, {0, 0}).cases == 15);
  CHECK(parse_family("small-m") == IdentityFamily::small_m);
  CHECK(error_code_of([] { parse_family("bogus"); }) == ErrorCode::unknown_identity);
}

TEST_CASE("failing verdicts report re-evaluable sides") {
  const auto v = named_identity_suite("jacobsthal-lucas-sum-minus", {0, 10});
  REQUIRE_FALSE(v.passed);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->parameters == "m=0, n=1");
  const auto& id = find_named_identity("jacobsthal-lucas-sum-minus");
  const auto [lhs, rhs] = id.sides(0, 1);
  CHECK(lhs == v.counterexample->lhs);
  CHECK(rhs == v.counterexample->rhs);
  CHECK_FALSE(id.holds);
  CHECK(v.summary() == "FAIL at m=0, n=1: lhs=-2 rhs=2");
}

TEST_CASE("ranges") {
  CHECK(IntRange::parse("-10..10").size() == 21);
  CHECK(IntRange::parse("7").lo == 7);
  CHECK(IntRange::parse("3..3").to_string() == "3");
  CHECK(error_code_of([] { IntRange::parse("5..1"); }) == ErrorCode::parse_error);
  CHECK(error_code_of([] { IntRange::parse("a..b"); }) == ErrorCode::parse_error);
}

TEST_CASE("named catalog") {
  for (const auto& id : named_identity_catalog()) {
    INFO(id.name);
    const auto v = named_identity_suite(id.name, {0, id.arity == 2 ? 24 : 64});
    CHECK(v.passed == id.holds);
  }
  const auto carlitz = named_identity_suite("carlitz", {1, 30});
  CHECK(carlitz.passed);
  CHECK(carlitz.cases == 30);
  const auto shift = named_identity_suite("tribonacci-shift", {0, 64});
  CHECK(shift.ranges == "n=4..64");
  CHECK(shift.cases == 61);
  CHECK(error_code_of([] { named_identity_suite("nope", {0, 1}); }) == ErrorCode::unknown_identity);
}

TEST_CASE("nonhomogeneous reduction") {
  const auto mersenne = nonhomogeneous_reduce(2, 0, 1, 0, 1);
  CHECK(mersenne.shift == Rational(-1));
  CHECK(mersenne.homogeneous.order() == 1);
  const BilateralSequence b(mersenne.homogeneous);
  for (long n = 0; n <= 20; ++n) CHECK(b.term(n) == pow(Rational(2), n));

  const auto pell_bar = nonhomogeneous_reduce(2, 1, 1, Rational(-1, 2), Rational(1, 2));
  CHECK(pell_bar.shift == Rational(-1, 2));
  CHECK(pell_bar.homogeneous == make_irs(CoefficientSet(ints({2, 1}))));

  const auto same = nonhomogeneous_reduce(3, 5, 0, 4, 9);
  CHECK(same.shift == Rational(0));
  CHECK(same.homogeneous == SequenceSpec(CoefficientSet(ints({3, 5})), ints({4, 9})));

  CHECK(error_code_of([] { nonhomogeneous_reduce(Rational(1, 2), Rational(1, 2), 1, 0, 1); }) ==
        ErrorCode::precondition_failed);
  CHECK(error_code_of([] { nonhomogeneous_reduce(2, 0, 1, 0, 5); }) == ErrorCode::precondition_failed);
}

TEST_CASE("reduction contract on random inputs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational p = testing::R(oracle::draw_rational(rng, 5));
    const Rational q = testing::R(oracle::draw_rational(rng, 5, true));
    const Rational ell = testing::R(oracle::draw_rational(rng, 5));
    if (p + q == Rational(1)) continue;
    const Rational a0 = testing::R(oracle::draw_rational(rng, 5));
    const Rational a1 = testing::R(oracle::draw_rational(rng, 5));
    const auto red = nonhomogeneous_reduce(p, q, ell, a0, a1);
    const BilateralSequence b(red.homogeneous);
    std::vector<Rational> a{a0, a1};
    for (long n = 2; n < 20; ++n) a.push_back(p * a[n - 1] + q * a[n - 2] + ell);
    for (long n = 0; n < 20; ++n) CHECK(b.term(n) + red.shift == a[static_cast<std::size_t>(n)]);
  }
}
