// Completion and reduction benchmarks on the bundled sample presentations.

#include <benchmark/benchmark.h>

#include "opbw/groebner.hpp"
#include "opbw/pbw.hpp"
#include "operad_samples.hpp"

using namespace opbw;

namespace {

void BM_complete_prelie(benchmark::State& state) {
  Presentation p = shuffle_expand(samples::prelie());
  CompletionOptions opts;
  opts.max_arity = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GroebnerBasis gb = complete(p, {}, opts);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_complete_prelie)->Arg(4)->Arg(5);

void BM_complete_leibniz(benchmark::State& state) {
  Presentation p = shuffle_expand(samples::leib());
  MonomialOrder ord{OrderKind::PathOppositeDegLex, {"tr", "tl"}, true};
  CompletionOptions opts;
  opts.max_arity = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GroebnerBasis gb = complete(p, ord, opts);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_complete_leibniz)->Arg(4)->Arg(5);

void BM_reduce_arity4(benchmark::State& state) {
  Presentation p = shuffle_expand(samples::prelie());
  CompletionOptions opts;
  opts.max_arity = 4;
  GroebnerBasis gb = complete(p, {}, opts);
  // One dense element: every arity-4 monomial with an alternating sign.
  auto ms = enumerate_monomials(p.gens, 4);
  Element e;
  int sign = 1;
  for (const ShuffleTree& m : ms) {
    e.add(m, Rat(sign));
    sign = -sign;
  }
  for (auto _ : state) {
    Element r = reduce(e, gb.elements, gb.order, gb.gens);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_reduce_arity4);

void BM_normal_monomial_counts(benchmark::State& state) {
  Presentation p = shuffle_expand(samples::prelie());
  CompletionOptions opts;
  opts.max_arity = 5;
  GroebnerBasis gb = complete(p, {}, opts);
  for (auto _ : state) {
    auto counts = normal_monomial_counts(gb, 5);
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(BM_normal_monomial_counts);

}  // namespace
