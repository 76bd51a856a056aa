// Series benchmarks: composition/reversion, plethysm, symmetric characters.

#include <benchmark/benchmark.h>

#include "opbw/series.hpp"

using namespace opbw;

namespace {

void BM_ps_compose(benchmark::State& state) {
  int trunc = static_cast<int>(state.range(0));
  PowerSeries f = ps_exp(trunc);
  PowerSeries g = ps_com(trunc);
  for (auto _ : state) {
    PowerSeries h = ps_compose(f, g);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_ps_compose)->Arg(10)->Arg(20);

void BM_necessary_condition_egf(benchmark::State& state) {
  PowerSeries f = ps_pois(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SeriesReport rep = necessary_condition_egf(f);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_necessary_condition_egf)->Arg(8)->Arg(12);

void BM_plethysm(benchmark::State& state) {
  int trunc = static_cast<int>(state.range(0));
  SymFun outer = epsilon(chi_lie(trunc));
  SymFun inner = epsilon(chi_com(trunc));
  for (auto _ : state) {
    SymFun c = plethysm(outer, inner);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_plethysm)->Arg(4)->Arg(6);

void BM_sn_character(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Rat total(0);
    for (const Partition& mu : partitions_of(n))
      for (const Partition& lam : partitions_of(n))
        total += sn_character(mu, lam);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_sn_character)->Arg(6)->Arg(8);

void BM_schur_expand(benchmark::State& state) {
  int trunc = static_cast<int>(state.range(0));
  SymFun chi = necessary_condition_sym(chi_com(trunc + 1), trunc).sym.value();
  for (auto _ : state) {
    auto coeffs = schur_expand(chi, trunc);
    benchmark::DoNotOptimize(coeffs);
  }
}
BENCHMARK(BM_schur_expand)->Arg(5)->Arg(6);

}  // namespace
