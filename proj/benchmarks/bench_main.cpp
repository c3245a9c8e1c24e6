#include <benchmark/benchmark.h>

#include "wittcenter/center.hpp"
#include "wittcenter/poisson2.hpp"
#include "wittcenter/random.hpp"
#include "wittcenter/suites.hpp"

using namespace wittcenter;

namespace {

void BM_WeylMul(benchmark::State& state) {
  const WeylParams params{3, 2, static_cast<unsigned>(state.range(0))};
  Rng rng(1);
  const auto u = random_weyl(rng, params, static_cast<unsigned>(state.range(1)), 8);
  const auto v = random_weyl(rng, params, static_cast<unsigned>(state.range(1)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_WeylMul)->Args({1, 4})->Args({1, 12})->Args({2, 6})->Args({2, 12});

void BM_WeylPowCentral(benchmark::State& state) {
  const auto z = canonical_lift(parse_poly("X1*Xi1 + X1^2 + Xi1", center_space(3, 1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_pow(z, 9));
}
BENCHMARK(BM_WeylPowCentral);

void BM_WittMul(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  const unsigned len = static_cast<unsigned>(state.range(1));
  witt_universal(p, len);
  Rng rng(2);
  const auto u = random_integer_witt(rng, p, len, 1000);
  const auto v = random_integer_witt(rng, p, len, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(witt_mul(u, v));
}
BENCHMARK(BM_WittMul)->Args({2, 4})->Args({3, 3})->Args({5, 3});

void BM_PhiOdd(benchmark::State& state) {
  Rng rng(3);
  const auto w = random_center_witt(rng, 3, 1, static_cast<unsigned>(state.range(0)) + 1, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(phi_odd(static_cast<unsigned>(state.range(0)), w));
}
BENCHMARK(BM_PhiOdd)->Arg(1)->Arg(2);

void BM_PhiEven(benchmark::State& state) {
  Rng rng(4);
  const auto sd = make_symplectic_data(1);
  const auto w = random_center_witt(rng, 2, 1, static_cast<unsigned>(state.range(0)) + 1, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(phi_even(static_cast<unsigned>(state.range(0)), w, sd));
}
BENCHMARK(BM_PhiEven)->Arg(1)->Arg(2);

void BM_CenterKernel(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const unsigned d = static_cast<unsigned>(state.range(1));
  const unsigned D = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(center_kernel(3, m, d, D));
}
BENCHMARK(BM_CenterKernel)->Args({1, 1, 9})->Args({2, 1, 27})->Args({1, 2, 9})->Unit(benchmark::kMillisecond);

void BM_Howell(benchmark::State& state) {
  Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  ModMatrix a(3, 3, n);
  for (std::size_t i = 0; i < n; ++i) {
    ModRow r(n);
    for (auto& x : r) x = std::uniform_int_distribution<std::uint64_t>(0, 26)(rng) * 3 % 27;
    a.add_row(r);
  }
  for (auto _ : state) benchmark::DoNotOptimize(howell_form(a));
}
BENCHMARK(BM_Howell)->Arg(16)->Arg(64)->Arg(128);

void BM_Suite(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.trials = 20;
  cfg.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("phi-odd-hom", cfg));
}
BENCHMARK(BM_Suite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
