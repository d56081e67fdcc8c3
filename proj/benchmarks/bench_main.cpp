#include <benchmark/benchmark.h>

#include "reppow/factor.hpp"
#include "reppow/families.hpp"
#include "reppow/search.hpp"

using namespace reppow;

namespace {

void BM_FactorQuotient(benchmark::State& state) {
  const auto b = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor_quotient(b, 3, 4));
}
BENCHMARK(BM_FactorQuotient)->Arg(100)->Arg(1000)->Arg(10000);

// 45-digit Phi_25(200) splits as 21 x 26 digits
void BM_FactorHardPiece(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(factor_quotient(200, 5, 5));
}
BENCHMARK(BM_FactorHardPiece)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_SolutionsForBase(benchmark::State& state) {
  const Triple t{3, 2, 4};
  const mpz_class b = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(solutions_for_base(t, b));
}
BENCHMARK(BM_SolutionsForBase)->Arg(500)->Arg(12400);

void BM_SearchRange231(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_range({2, 3, 1}, 2, 500));
}
BENCHMARK(BM_SearchRange231)->Unit(benchmark::kMillisecond);

void BM_ZeckendorfSquares(benchmark::State& state) {
  const mpz_class limit = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(search_fib_squares(limit));
}
BENCHMARK(BM_ZeckendorfSquares)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Generate422(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_422(count));
}
BENCHMARK(BM_Generate422)->Arg(5)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
