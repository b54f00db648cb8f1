#include "hilbcalc/gamma.hpp"
#include "hilbcalc/local_model.hpp"
#include "hilbcalc/random_class.hpp"
#include "hilbcalc/transfer.hpp"

#include <benchmark/benchmark.h>

using namespace hilbcalc;

namespace {

TautClass big_class(int m) {
  std::mt19937_64 rng(7);
  TautClass c(m, Backend::Symbolic);
  for (int i = 0; i < 40; ++i)
    c += random_class(m, Backend::Symbolic, rng, 6);
  return c;
}

void BM_mul_gamma_serial(benchmark::State &st) {
  auto c = big_class(static_cast<int>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(mul_gamma(c));
}

void BM_mul_gamma_parallel(benchmark::State &st) {
  auto c = big_class(static_cast<int>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(mul_gamma_parallel(c));
}

void BM_multisecant_serial(benchmark::State &st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(multisecant_N3());
}

void BM_multisecant_parallel(benchmark::State &st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(multisecant_N3_parallel());
}

void BM_local_model_serial(benchmark::State &st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(verify_local_model(static_cast<int>(st.range(0))));
}

void BM_local_model_parallel(benchmark::State &st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(verify_local_model_parallel(static_cast<int>(st.range(0))));
}

void BM_gamma_power(benchmark::State &st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(gamma_power_class(static_cast<int>(st.range(0)), 4, Backend::Symbolic));
}

} // namespace

BENCHMARK(BM_mul_gamma_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_gamma_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multisecant_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multisecant_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_local_model_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_local_model_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gamma_power)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
