#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lrs/genfunc.hpp"
#include "lrs/polynomial.hpp"
#include "oracles.hpp"

using namespace lrs;
using testing::error_code_of;
using testing::ints;

TEST_CASE("polynomial basics") {
  const Polynomial a(ints({1, -1}));
  const Polynomial b(ints({1, 1}));
  CHECK((a * b) == Polynomial(ints({1, 0, -1})));
  CHECK((a + b) == Polynomial(ints({2})));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(Polynomial(ints({2, -1, -2})).to_string() == "2 - t - 2t^2");
  CHECK(Polynomial({Rational(0), Rational(1, 2)}).to_string() == "(1/2)t");
  CHECK(Polynomial(ints({0, 0, 1})).to_string() == "t^2");
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial(ints({1, 2, 3}))(Rational(2)) == Rational(17));
}

TEST_CASE("generating functions of the examples") {
  const auto trib = make_irs(CoefficientSet(ints({1, 1, 1})));
  CHECK(genfunc_of(trib).to_string() == "t^2/(1 - t - t^2 - t^3)");
  const SequenceSpec lucas(CoefficientSet(ints({1, 1})), ints({2, 1}));
  CHECK(genfunc_of(lucas).to_string() == "(2 - t)/(1 - t - t^2)");
  CHECK(expand(genfunc_of(lucas), 6) == ints({2, 1, 3, 4, 7, 11}));
  CHECK(error_code_of([] { RationalGF(Polynomial(ints({1})), Polynomial(ints({2, 1}))); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("series expansion reproduces the recurrence") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 5;
    std::vector<mpq_class> p;
    std::vector<mpq_class> init;
    for (std::size_t j = 0; j < r; ++j) {
      p.push_back(oracle::draw_rational(rng, 5, j + 1 == r));
      init.push_back(oracle::draw_rational(rng, 5));
    }
    const SequenceSpec spec(CoefficientSet(testing::Rs(p)), testing::Rs(init));
    CHECK(expand(genfunc_of(spec), 30) == testing::Rs(oracle::forward_terms(p, init, 30)));
  }
}

TEST_CASE("impulse-response shifts from the numerator") {
  const SequenceSpec lucas(CoefficientSet(ints({1, 1})), ints({2, 1}));
  const auto terms = irs_from_gf_shift(lucas);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0] == ShiftTerm{1, Rational(2)});
  CHECK(terms[1] == ShiftTerm{0, Rational(-1)});
  const BilateralSequence F(make_irs(lucas.coefficients()));
  const BilateralSequence L(lucas);
  for (long n = 0; n < 30; ++n) {
    Rational sum(0);
    for (const auto& t : terms) sum += t.weight * F.term(n + t.shift);
    CHECK(sum == L.term(n));
  }
}
