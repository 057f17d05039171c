// Serial vs parallel transition monoid closure on random subgroups of
// increasing size.

#include <benchmark/benchmark.h>

#include "oracle.hpp"
#include "stallings/monoid.hpp"

using namespace stallings;

namespace {
  // Three random generators of the given length over {a, b}.
  InverseAutomaton sample(std::size_t length) {
    Alphabet    a{"a", "b"};
    oracle::Rng rng(length);
    std::vector<ReducedWord> gens;
    for (int i = 0; i < 3; ++i) {
      gens.push_back(oracle::random_reduced_word(rng, a, length));
    }
    return stallings::stallings(std::span<ReducedWord const>(gens), a);
  }

  void BM_serial(benchmark::State& state) {
    auto aut = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(serial::generate_monoid(aut).size());
    }
    state.counters["states"] = static_cast<double>(aut.state_count());
    state.counters["size"]   = static_cast<double>(serial::generate_monoid(aut).size());
  }

  void BM_parallel(benchmark::State& state) {
    auto aut = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(generate_monoid(aut).size());
    }
    state.counters["states"] = static_cast<double>(aut.state_count());
  }
}  // namespace

BENCHMARK(BM_serial)->Arg(6)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Arg(6)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
