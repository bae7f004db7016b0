#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "capmatch/capdp.hpp"
#include "capmatch/generate.hpp"
#include "capmatch/kernels.hpp"

using namespace capmatch;

namespace {

std::vector<Cost> costs(std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<Cost> v(n);
  for (auto& c : v) c = Cost(static_cast<std::int64_t>(rng() % 100000));
  return v;
}

void BM_TrailingReference(benchmark::State& st) {
  const auto in = costs(static_cast<std::size_t>(st.range(0)));
  std::vector<Cost> out(in.size());
  for (auto _ : st) {
    kernels::reference::trailing_min(in, static_cast<std::size_t>(st.range(1)), out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_TrailingFast(benchmark::State& st) {
  const auto in = costs(static_cast<std::size_t>(st.range(0)));
  std::vector<Cost> out(in.size());
  for (auto _ : st) {
    kernels::trailing_min(in, static_cast<std::size_t>(st.range(1)), out, static_cast<int>(st.range(2)));
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_LeadingFast(benchmark::State& st) {
  const auto in = costs(static_cast<std::size_t>(st.range(0)));
  std::vector<Cost> out(in.size());
  for (auto _ : st) {
    kernels::leading_min(in, static_cast<std::size_t>(st.range(1)), out, static_cast<int>(st.range(2)));
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_SolveCost(benchmark::State& st) {
  const Instance inst = validate_instance(gen::bench_instance(static_cast<std::size_t>(st.range(0)), st.range(1), 7));
  capdp::SolveOptions opts;
  for (auto _ : st) benchmark::DoNotOptimize(capdp::solve_cost(inst, opts));
}

}  // namespace

BENCHMARK(BM_TrailingReference)->Args({10000, 4})->Args({10000, 64});
BENCHMARK(BM_TrailingFast)->ArgsProduct({{10000, 100000}, {2, 4, 64, 1024}, {1, 2}});
BENCHMARK(BM_LeadingFast)->ArgsProduct({{10000, 100000}, {2, 4, 64, 1024}, {1, 2}});
BENCHMARK(BM_SolveCost)->ArgsProduct({{1000, 2000, 4000}, {2, 64}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
