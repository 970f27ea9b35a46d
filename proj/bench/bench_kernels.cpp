// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "consec/kernels.hpp"

using namespace consec;

namespace {

const std::vector<Permutation> kBasis{Permutation::parse("1324"), Permutation::parse("4231")};
const std::vector<Word> kWords{Word{1, 1, 1}, Word{0, 1, 0, 1}};
const std::vector<Permutation> kPath{Permutation::parse("1324"), Permutation::parse("2134"),
                                     Permutation::parse("1243"), Permutation::parse("1324")};

void avoiding_perms_parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::avoiding_perms(kBasis, static_cast<std::size_t>(state.range(0))));
}
void avoiding_perms_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::avoiding_perms(kBasis, static_cast<std::size_t>(state.range(0))));
}
void avoiding_words_parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::avoiding_words(2, kWords, static_cast<std::size_t>(state.range(0))));
}
void avoiding_words_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::avoiding_words(2, kWords, static_cast<std::size_t>(state.range(0))));
}
void sigma_filter_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sigma_filter(kPath));
}
void sigma_filter_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::sigma_filter(kPath));
}

std::vector<Permutation> universe() { return kernels::serial::avoiding_perms(kBasis, 8); }

void unjoinable_parallel(benchmark::State& state) {
  const auto items = kernels::serial::avoiding_perms(kBasis, 5);
  const auto big = universe();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::first_unjoinable_pair(
        items.size(), big.size(), [&](std::size_t i, std::size_t u) { return perm_factor_leq(items[i], big[u]); }));
}
void unjoinable_serial(benchmark::State& state) {
  const auto items = kernels::serial::avoiding_perms(kBasis, 5);
  const auto big = universe();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::serial::first_unjoinable_pair(
        items.size(), big.size(), [&](std::size_t i, std::size_t u) { return perm_factor_leq(items[i], big[u]); }));
}

}  // namespace

BENCHMARK(avoiding_perms_parallel)->Arg(8)->Arg(9);
BENCHMARK(avoiding_perms_serial)->Arg(8)->Arg(9);
BENCHMARK(avoiding_words_parallel)->Arg(16)->Arg(20);
BENCHMARK(avoiding_words_serial)->Arg(16)->Arg(20);
BENCHMARK(sigma_filter_parallel);
BENCHMARK(sigma_filter_serial);
BENCHMARK(unjoinable_parallel);
BENCHMARK(unjoinable_serial);

BENCHMARK_MAIN();
