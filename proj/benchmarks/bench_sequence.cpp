#include <benchmark/benchmark.h>

#include "lrs/closed_form.hpp"
#include "lrs/sequence.hpp"

namespace {

lrs::CoefficientSet integer_coefficients(std::initializer_list<long> p) {
  std::vector<lrs::Rational> v;
  for (long x : p) v.emplace_back(x);
  return lrs::CoefficientSet(v);
}

void BM_ForwardTerm(benchmark::State& state) {
  const auto spec = lrs::make_irs(integer_coefficients({1, 1, 1}));
  for (auto _ : state) {
    // Fresh sequence each iteration so memoization does not hide the work.
    const lrs::BilateralSequence seq(spec);
    benchmark::DoNotOptimize(seq.term(state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardTerm)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_CharacteristicRoots(benchmark::State& state) {
  std::vector<lrs::Rational> p;
  for (long j = 1; j <= state.range(0); ++j) p.emplace_back(j % 3 == 0 ? -j : j);
  const lrs::CoefficientSet cs(p);
  for (auto _ : state) benchmark::DoNotOptimize(lrs::characteristic_roots(cs, 256));
}
BENCHMARK(BM_CharacteristicRoots)->DenseRange(2, 8, 2);

void BM_ClosedFormTerm(benchmark::State& state) {
  const auto spec = lrs::make_irs(integer_coefficients({1, 1, 1}));
  const auto roots = lrs::characteristic_roots(spec.coefficients(), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lrs::general_closed_form(spec, roots, 40));
}
BENCHMARK(BM_ClosedFormTerm)->Arg(128)->Arg(256)->Arg(1024);

}  // namespace
