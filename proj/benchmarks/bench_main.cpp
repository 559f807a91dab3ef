#include <benchmark/benchmark.h>

#include "logdisc/certificate.hpp"
#include "logdisc/discriminant.hpp"
#include "logdisc/primes.hpp"

namespace {

using namespace logdisc;

void BM_ResultantModP(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t p = crt_prime(0);
  const PrimeFieldPoly fp = psi_poly(n).reduce(p);
  const PrimeFieldPoly dp = reduced_coeffs(n).as_poly().reduce(p);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_mod_p(fp, dp));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ResultantModP)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_PnExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p_n_exact(n));
}
BENCHMARK(BM_PnExact)->Arg(21)->Arg(63)->Arg(125)->Unit(benchmark::kMillisecond);

void BM_DiscMod(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t ell = next_prime_u64(n);
  for (auto _ : state) benchmark::DoNotOptimize(disc_mod(n, ell));
}
BENCHMARK(BM_DiscMod)->Arg(333)->Arg(1001)->Arg(4001)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(n));
}
BENCHMARK(BM_Classify)->Arg(25)->Arg(225)->Arg(961)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
