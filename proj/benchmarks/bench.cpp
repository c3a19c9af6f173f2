#include <benchmark/benchmark.h>

#include <random>

#include "vstab/vstab.hpp"

namespace {

using namespace vstab;

void BM_Compose(benchmark::State& state) {
  const Space space{3, 2};
  const Element a = random_element(space, static_cast<int>(state.range(0)), 1);
  const Element b = random_element(space, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(16)->Arg(64);

void BM_Invert(benchmark::State& state) {
  const Element a = random_element(Space{3, 2}, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}
BENCHMARK(BM_Invert)->Arg(16)->Arg(64);

void BM_Normalize(benchmark::State& state) {
  const Space space{2, 1};
  std::mt19937_64 rng(4);
  std::vector<Address> raw;
  for (int i = 0; i < state.range(0); ++i) {
    Address a{space, 1, {}};
    for (int d = 0; d < 8; ++d) a.word.push_back(1 + static_cast<int>(rng() % 2));
    raw.push_back(a);
  }
  for (auto _ : state) benchmark::DoNotOptimize(normalize(space, raw));
}
BENCHMARK(BM_Normalize)->Arg(64)->Arg(256);

void BM_GermTuple(benchmark::State& state) {
  const Space space{2, 1};
  const RationalSet set = parse_set(space, "{1:(1), 1:(2), 1:1.2(2.1)}");
  const Element f = power(attracting_all(set), 5);
  for (auto _ : state) benchmark::DoNotOptimize(germ_tuple(f, set));
}
BENCHMARK(BM_GermTuple);

void BM_HnnDecompose(benchmark::State& state) {
  const Space space{2, 1};
  const RationalSet set = parse_set(space, "{1:(1), 1:(2)}");
  const HnnData data = hnn_data(set, set.points()[1], 1);
  std::mt19937_64 rng(5);
  const Element g = FixSampler(set).fix(rng, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(hnn_decompose(data, g));
}
BENCHMARK(BM_HnnDecompose);

void BM_Conjugate(benchmark::State& state) {
  const RationalSet set = parse_set(Space{3, 1}, "{1:(1), 1:2(3)}");
  const RationalSet set_prime = parse_set(Space{3, 2}, "{2:(1.2), 1:3(2)}");
  const ConjugatorData data = conjugator(set, set_prime, {0, 1});
  std::mt19937_64 rng(6);
  const Element g = FixSampler(set).fix(rng, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conjugate(data, g));
}
BENCHMARK(BM_Conjugate)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
