#include "bnb/corpus.hpp"
#include "bnb/exact.hpp"
#include "bnb/search.hpp"

#include <benchmark/benchmark.h>

using namespace bnb;

namespace {

Tree bench_tree(int bridge) { return build_family(DoubleSpiderSpec{{2, 3}, bridge, {3, 3}}); }

void exact_serial(benchmark::State &state)
{
    Tree t = bench_tree(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_bn_exact(t).value);
    state.counters["n"] = t.order();
}

void exact_parallel(benchmark::State &state)
{
    Tree t = bench_tree(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_bn_exact_parallel(t, {}, static_cast<int>(state.range(1))).value);
    state.counters["n"] = t.order();
}

void search(benchmark::State &state)
{
    SearchConfig config;
    config.max_n = static_cast<int>(state.range(0));
    config.check = Check::Sandwich;
    config.jobs = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_search(config).checked);
}

void enumerate(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_trees(static_cast<int>(state.range(0))).size());
}

} // namespace

BENCHMARK(exact_serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(exact_parallel)->Args({4, 1})->Args({4, 2})->Args({8, 1})->Args({8, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(search)->Args({10, 1})->Args({10, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(enumerate)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
