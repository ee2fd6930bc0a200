#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "lrs/json_io.hpp"
#include "oracles.hpp"

using namespace lrs;
using testing::error_code_of;
using testing::ints;

TEST_CASE("spec JSON round trip") {
  const SequenceSpec s(CoefficientSet({Rational(1, 2), Rational(-3)}), {Rational(0), Rational(7, 3)});
  const std::string text = spec_to_json(s);
  CHECK(text == R"({"coefficients":["1/2","-3"],"initials":["0","7/3"]})");
  CHECK(spec_from_json(text) == s);
  CHECK(spec_from_json(R"({"coefficients":[1,1],"initials":[0,1]})") == make_irs(CoefficientSet(ints({1, 1}))));
}

TEST_CASE("random specs round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 6;
    std::vector<Rational> p;
    std::vector<Rational> init;
    for (std::size_t j = 0; j < r; ++j) {
      p.push_back(testing::R(oracle::draw_rational(rng, 1000, j + 1 == r)));
      init.push_back(testing::R(oracle::draw_rational(rng, 1000)));
    }
    const SequenceSpec s(CoefficientSet(p), init);
    CHECK(spec_from_json(spec_to_json(s)) == s);
  }
}

TEST_CASE("malformed spec documents") {
  CHECK(error_code_of([] { spec_from_json("{"); }) == ErrorCode::parse_error);
  CHECK(error_code_of([] { spec_from_json("[1]"); }) == ErrorCode::parse_error);
  CHECK(error_code_of([] { spec_from_json(R"({"coefficients":[1]})"); }) == ErrorCode::parse_error);
  CHECK(error_code_of([] { spec_from_json(R"({"coefficients":["x"],"initials":["1"]})"); }) == ErrorCode::parse_error);
  CHECK(error_code_of([] { spec_from_json(R"({"coefficients":[1.5],"initials":["1"]})"); }) == ErrorCode::parse_error);
  CHECK(error_code_of([] { spec_from_json(R"({"coefficients":[1,0],"initials":[0,1]})"); }) ==
        ErrorCode::zero_leading_coefficient);
  CHECK(error_code_of([] { load_spec_file("/nonexistent/spec.json"); }) == ErrorCode::io_error);
}

TEST_CASE("spec files") {
  const std::string path = "lrs_json_io_test_spec.json";
  {
    std::ofstream out(path);
    out << R"({"coefficients": ["1", "1", "1"], "initials": ["2", "1", "1"]})";
  }
  CHECK(load_spec_file(path) == SequenceSpec(CoefficientSet(ints({1, 1, 1})), ints({2, 1, 1})));
  std::remove(path.c_str());
}

TEST_CASE("exports") {
  IrsRepresentation rep{{{1, Rational(6, 19)}, {0, Rational(-4, 19)}}};
  CHECK(representation_to_json(rep) == R"({"terms":[{"c":"6/19","delta":1},{"c":"-4/19","delta":0}]})");
  IdentityVerdict v;
  v.identity = "carlitz";
  v.ranges = "n=0..3";
  v.cases = 4;
  CHECK(verdict_to_json(v) == R"({"cases":4,"identity":"carlitz","passed":true,"ranges":"n=0..3"})");
  v.passed = false;
  v.counterexample = Counterexample{"n=2", Rational(1), Rational(2)};
  CHECK(verdict_to_json(v).find(R"("counterexample":{"lhs":"1","parameters":"n=2","rhs":"2"})") != std::string::npos);
  CHECK(terms_to_json(0, ints({0, 1})) == R"({"from":0,"terms":["0","1"]})");
}
