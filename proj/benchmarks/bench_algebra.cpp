#include <benchmark/benchmark.h>

#include "lrs/identities.hpp"
#include "lrs/irs_algebra.hpp"

namespace {

void BM_ToeplitzSolve(benchmark::State& state) {
  const long r = state.range(0);
  std::vector<lrs::Rational> p;
  std::vector<lrs::Rational> init;
  for (long j = 0; j < r; ++j) {
    p.emplace_back(j + 1);
    init.emplace_back((j * 7 + 3) % 11 - 5);
  }
  const lrs::SequenceSpec spec(lrs::CoefficientSet(p), init);
  for (auto _ : state) benchmark::DoNotOptimize(lrs::solve_toeplitz(lrs::build_toeplitz(spec)));
}
BENCHMARK(BM_ToeplitzSolve)->DenseRange(2, 10, 2);

void BM_NonlinearSweep(benchmark::State& state) {
  const auto spec = lrs::make_irs(lrs::CoefficientSet({lrs::Rational(1), lrs::Rational(1)}));
  for (auto _ : state)
    benchmark::DoNotOptimize(lrs::sweep(lrs::IdentityFamily::nonlinear, spec, {1, 5}, {0, 6}, {-10, 10}));
}
BENCHMARK(BM_NonlinearSweep)->Unit(benchmark::kMillisecond);

}  // namespace
