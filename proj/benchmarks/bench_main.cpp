#include <benchmark/benchmark.h>

#include "hk4/graph.hpp"
#include "hk4/oracle.hpp"
#include "hk4/reachability.hpp"
#include "hk4/tiler.hpp"

namespace {

using namespace hk4;

void BM_min_weighted_degree(benchmark::State& state) {
  auto g = make_random((int)state.range(0), 1000000, Rat(1, 2), "uniform", 7);
  for (auto _ : state) {
    auto d = min_weighted_degree(g);
    benchmark::DoNotOptimize(d.min_num);
  }
}
BENCHMARK(BM_min_weighted_degree)->Arg(200)->Arg(400)->Arg(800);

void BM_oracle_factor(benchmark::State& state) {
  auto g = make_random((int)state.range(0), 1000000, Rat(1, 2), "uniform", 7);
  for (auto _ : state) {
    auto r = exact_factor_exists(g);
    benchmark::DoNotOptimize(r.answer_bool);
  }
}
BENCHMARK(BM_oracle_factor)->Arg(12)->Arg(16);

void BM_almost_cover(benchmark::State& state) {
  auto g = make_random_with_min_degree((int)state.range(0), 1000000, Rat(1, 2),
                                       Rat(1, 20), 7);
  for (auto _ : state) {
    auto rep = almost_cover(g, Rat(1, 20));
    benchmark::DoNotOptimize(rep.uncovered.size());
  }
}
BENCHMARK(BM_almost_cover)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_two_from_three(benchmark::State& state) {
  auto g = make_random_with_min_degree((int)state.range(0), 1000000, Rat(1, 2),
                                       Rat(1, 20), 7);
  for (auto _ : state) {
    auto r = two_from_three(g, 0, 1, 2, {});
    benchmark::DoNotOptimize(r.ok());
  }
}
BENCHMARK(BM_two_from_three)->Arg(100)->Arg(300);

void BM_connector_direct(benchmark::State& state) {
  auto g = make_random_with_min_degree((int)state.range(0), 1000000, Rat(1, 2),
                                       Rat(1, 20), 7);
  ReachParams params{3, 1};
  for (auto _ : state) {
    auto c = certify_reachable(g, 0, 1, params);
    benchmark::DoNotOptimize(c.has_value());
  }
}
BENCHMARK(BM_connector_direct)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
