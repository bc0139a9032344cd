#include <benchmark/benchmark.h>

#include <random>

#include "dlga/verify.hpp"

namespace {

using namespace dlga;

GroupParams stock(std::int64_t q, int d) {
  std::vector<std::int64_t> l;
  for (int k = 1; k < d; ++k) l.push_back(k);
  return GroupParams::validate(q, d, l);
}

void BM_Decompose(benchmark::State& state) {
  const PolyRing ring(stock(5, 3));
  std::mt19937_64 rng(7);
  std::vector<RationalForm> xs;
  for (int k = 0; k < 256; ++k) xs.push_back(random_rational(ring, rng, 8, 4));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ring.decompose(xs[k++ % xs.size()]));
}
BENCHMARK(BM_Decompose);

void BM_ApplyGenerator(benchmark::State& state) {
  const Group group(stock(5, 3));
  std::mt19937_64 rng(11);
  const auto gens = group.generators();
  std::vector<GroupElement> gs;
  for (int k = 0; k < 256; ++k) gs.push_back(random_element(group, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(group.apply(gs[k % gs.size()], gens[k % gens.size()]));
    ++k;
  }
}
BENCHMARK(BM_ApplyGenerator);

void BM_Ball(benchmark::State& state) {
  const Group group(stock(3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(group.ball(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_Ball)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_BuildMultiplier(benchmark::State& state) {
  const Group group(stock(state.range(0), static_cast<int>(state.range(1))));
  const Codec codec(group);
  const MultiplierBuilder builder(codec);
  const auto gens = group.base_generators();
  const Generator s = gens.back();
  std::size_t states = 0;
  for (auto _ : state) states = builder.multiplier(s).num_states();
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_BuildMultiplier)->Args({3, 3})->Args({5, 3})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const Group group(stock(3, 3));
  const Codec codec(group);
  const Automaton m = MultiplierBuilder(codec).multiplier(group.base_generators().front());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(m, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

void BM_ApplyMultiplier(benchmark::State& state) {
  const Group group(stock(3, 3));
  const Codec codec(group);
  const Generator s = group.base_generators().front();
  const Automaton m = MultiplierBuilder(codec).multiplier(s);
  std::mt19937_64 rng(5);
  std::vector<SymbolString> inputs;
  for (int k = 0; k < 64; ++k) inputs.push_back(codec.encode(group.evaluate(random_word(group, rng, 6))));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(apply_multiplier(m, inputs[k++ % inputs.size()], 8));
}
BENCHMARK(BM_ApplyMultiplier);

}  // namespace

BENCHMARK_MAIN();
