#include "bunzeta/bun_series.hpp"
#include "bunzeta/bundle_oracle.hpp"
#include "bunzeta/curve_zeta.hpp"
#include "bunzeta/root_system.hpp"
#include "bunzeta/trunc_series.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace bunzeta;

namespace {

BunGContext p1_context(const char* group, long q) {
  return BunGContext(group_invariants(parse_cartan_label(group)),
                     CurveZeta::projective_line(q));
}

TruncSeries random_series(int order, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  std::vector<Rat> coeffs;
  for (int k = 0; k <= order; ++k) coeffs.push_back(make_rat(num(rng), den(rng)));
  return TruncSeries(order, std::move(coeffs));
}

void BM_RootClosureE8(benchmark::State& state) {
  CartanLabel label = parse_cartan_label("E8");
  for (auto _ : state) {
    RootDatum datum = build_root_datum(label);
    benchmark::DoNotOptimize(datum);
  }
}
BENCHMARK(BM_RootClosureE8);

void BM_ChevalleyOrderE8(benchmark::State& state) {
  GroupInvariants inv = group_invariants(parse_cartan_label("E8"));
  for (auto _ : state) {
    Int order = chevalley_order(inv, 5);
    benchmark::DoNotOptimize(order);
  }
}
BENCHMARK(BM_ChevalleyOrderE8);

void BM_SeriesMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  TruncSeries a = random_series(order, 1);
  TruncSeries b = random_series(order, 2);
  for (auto _ : state) {
    TruncSeries c = a * b;
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMul)->Range(25, 200)->Complexity();

void BM_SeriesIdentityG2(benchmark::State& state) {
  BunGContext ctx = p1_context("G2", 2);
  for (auto _ : state) {
    SeriesComparison cmp = compare_trace_series(ctx, 20);
    benchmark::DoNotOptimize(cmp);
  }
}
BENCHMARK(BM_SeriesIdentityG2);

void BM_BigradedTraceE8(benchmark::State& state) {
  BunGContext ctx = p1_context("E8", 2);
  for (auto _ : state) {
    BiGradedTrace tr = bigraded_trace(ctx, 40);
    benchmark::DoNotOptimize(tr);
  }
}
BENCHMARK(BM_BigradedTraceE8);

void BM_MassSL3(benchmark::State& state) {
  for (auto _ : state) {
    MassReport report = sl_mass_p1(3, 2, 20);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_MassSL3);

void BM_EulerPartialA1(benchmark::State& state) {
  BunGContext ctx = p1_context("A1", 2);
  for (auto _ : state) {
    EulerTruncation part = euler_partial_product(ctx, 12);
    benchmark::DoNotOptimize(part);
  }
}
BENCHMARK(BM_EulerPartialA1);

}  // namespace

BENCHMARK_MAIN();
