// Serial against parallel search on word inclusions whose right-hand side
// mixes polarities, so pruning leaves most membership bits free. The
// instances are valid, so every candidate is checked.

#include <benchmark/benchmark.h>

#include "kavc/decision.hpp"

namespace {

using namespace kavc;

Literal pos(const char* x) { return Literal{Variable{x}, Polarity::positive}; }
Literal neg(const char* x) { return Literal{Variable{x}, Polarity::negative}; }

// x ~x ... of the given length, against a right-hand side using x both ways.
LitWord alternating(std::size_t n) {
  LitWord u;
  for (std::size_t k = 0; k < n; ++k) u.push_back(k % 2 == 0 ? pos("x") : neg("x"));
  return u;
}

const Term kRhs = parse_term("(x + ~x)* . (x . ~x + ~x . x + 1)");


void search(benchmark::State& state, Execution execution) {
  const LitWord u = alternating(static_cast<std::size_t>(state.range(0)));
  DecisionOptions opts;
  opts.execution = execution;
  opts.parallel_threshold = 0;
  for (auto _ : state) {
    const Verdict v = decide_word_inclusion(u, kRhs, opts);
    benchmark::DoNotOptimize(v);
  }
}

void BM_WordInclusionSerial(benchmark::State& state) { search(state, Execution::serial); }
void BM_WordInclusionParallel(benchmark::State& state) { search(state, Execution::parallel); }

BENCHMARK(BM_WordInclusionSerial)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WordInclusionParallel)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_EvalFactors(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Term t = parse_term("(x . ~y + y)* . ~x + (x + ~y . y)*");
  Valuation v(n);
  FiniteWords xs;
  FiniteWords ys;
  for (std::size_t i = 0; i < n; ++i) {
    (i % 2 == 0 ? xs : ys).words.insert(factor_word({i, i + 1}));
    if (i + 2 <= n) xs.words.insert(factor_word({i, i + 2}));
  }
  v.assign(Variable{"x"}, xs);
  v.assign(Variable{"y"}, ys);
  for (auto _ : state) {
    const auto table = eval_factors(t, v);
    benchmark::DoNotOptimize(table.contains({0, n}));
  }
}

BENCHMARK(BM_EvalFactors)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
