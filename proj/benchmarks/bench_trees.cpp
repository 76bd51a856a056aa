// Tree-level benchmarks: enumeration, comparison, grafting, divisor search.

#include <benchmark/benchmark.h>

#include "opbw/trees.hpp"

using namespace opbw;

namespace {

GeneratorSet two_binary() {
  return GeneratorSet(
      std::vector<Generator>{Generator{"l", 2, 1}, Generator{"r", 2, 1}});
}

void BM_enumerate_monomials(benchmark::State& state) {
  GeneratorSet gens = two_binary();
  int arity = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ms = enumerate_monomials(gens, arity);
    benchmark::DoNotOptimize(ms);
  }
}
BENCHMARK(BM_enumerate_monomials)->Arg(4)->Arg(5)->Arg(6);

void BM_compare_pathlex(benchmark::State& state) {
  GeneratorSet gens = two_binary();
  MonomialOrder ord;
  auto ms = enumerate_monomials(gens, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int acc = 0;
    for (size_t i = 0; i + 1 < ms.size(); ++i)
      acc += compare(ord, gens, ms[i], ms[i + 1]);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_compare_pathlex)->Arg(4)->Arg(5);

void BM_graft(benchmark::State& state) {
  GeneratorSet gens = two_binary();
  auto outers = enumerate_monomials(gens, 4);
  auto inner = enumerate_monomials(gens, 3).front();
  for (auto _ : state) {
    for (const ShuffleTree& outer : outers) {
      ShuffleTree g = graft(gens, outer, 2, inner);
      benchmark::DoNotOptimize(g);
    }
  }
}
BENCHMARK(BM_graft);

void BM_divisors(benchmark::State& state) {
  GeneratorSet gens = two_binary();
  auto hosts = enumerate_monomials(gens, 6);
  auto pattern = parse_tree("l(l(1,2),3)", gens);
  for (auto _ : state) {
    size_t total = 0;
    for (const ShuffleTree& host : hosts) total += divisors(host, pattern).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_divisors);

}  // namespace
