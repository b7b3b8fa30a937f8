#include <benchmark/benchmark.h>

#include "zeta/exact/cot_poly.hpp"
#include "zeta/exact/exact_zeta.hpp"
#include "zeta/numeric/hurwitz.hpp"
#include "zeta/numeric/polygamma.hpp"
#include "zeta/oracle/bernoulli.hpp"
#include "zeta/oracle/dirichlet.hpp"

namespace {

using namespace zeta;

// Full differentiation chain Q_0..Q_n from scratch.
void CotChainSweep(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    exact::CotChain chain;
    benchmark::DoNotOptimize(chain.at(order));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(CotChainSweep)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void ExactSweep(benchmark::State& state) {
  const auto max_s = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    exact::CotChain chain;
    for (unsigned s = 1; s <= max_s; ++s) benchmark::DoNotOptimize(exact::zeta_even_exact(s, chain));
  }
}
BENCHMARK(ExactSweep)->Arg(10)->Arg(50);

void BernoulliTableFill(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    oracle::BernoulliTable table;
    benchmark::DoNotOptimize(table.at(n));
  }
}
BENCHMARK(BernoulliTableFill)->Arg(100)->Arg(256);

void HurwitzQuarter(benchmark::State& state) {
  const long prec = state.range(0);
  (void)oracle::bernoulli(static_cast<unsigned>(prec));  // warm the shared table
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric::hurwitz_zeta(3, BigRational(1, 4), prec));
  }
}
BENCHMARK(HurwitzQuarter)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void ZetaViaPolygamma(benchmark::State& state) {
  const long prec = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric::zeta_via_polygamma(state.range(0), prec));
  }
}
BENCHMARK(ZetaViaPolygamma)->Args({3, 128})->Args({20, 128})->Args({3, 512});

void ZetaDirichlet(benchmark::State& state) {
  const long prec = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::zeta_dirichlet(state.range(0), prec));
  }
}
BENCHMARK(ZetaDirichlet)->Args({3, 128})->Args({3, 512});

}  // namespace

BENCHMARK_MAIN();
