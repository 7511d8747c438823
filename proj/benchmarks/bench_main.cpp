#include <benchmark/benchmark.h>

#include "mlapd/alg_caterpillar.hpp"
#include "mlapd/alg_depth.hpp"
#include "mlapd/generators.hpp"
#include "mlapd/hpd.hpp"
#include "mlapd/offline_opt.hpp"

using namespace mlapd;

namespace {

Instance bench_instance(std::size_t n, std::size_t m, std::uint64_t seed) {
    RootedTree tree = gen_tree(TreeShape::Random, n, seed);
    auto requests = gen_requests(tree, m, Rat(m), Rat(1, 2), seed + 1);
    return Instance{std::move(tree), std::move(requests)};
}

void BM_SimulateDepth(benchmark::State& state) {
    Instance inst = bench_instance(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)), 7);
    Rat theta = default_depth_theta(inst.tree);
    for (auto _ : state) {
        DepthPolicy policy(inst.tree, DepthParams{theta});
        benchmark::DoNotOptimize(simulate(inst, policy).solution.total_cost);
    }
}
BENCHMARK(BM_SimulateDepth)->Args({40, 30})->Args({200, 200})->Args({1000, 500});

void BM_SimulateCaterpillar(benchmark::State& state) {
    Instance inst = bench_instance(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)), 11);
    Decomposition decomp = min_caterpillar_decomposition(inst.tree);
    for (auto _ : state) {
        CaterpillarPolicy policy(inst.tree, default_caterpillar_params(decomp));
        benchmark::DoNotOptimize(simulate(inst, policy).solution.total_cost);
    }
}
BENCHMARK(BM_SimulateCaterpillar)->Args({40, 30})->Args({200, 200})->Args({1000, 500});

void BM_MinDecomposition(benchmark::State& state) {
    RootedTree tree = gen_tree(TreeShape::Random, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(min_caterpillar_decomposition(tree).dimension);
}
BENCHMARK(BM_MinDecomposition)->Arg(1000)->Arg(100000);

void BM_ExactOpt(benchmark::State& state) {
    Instance inst = bench_instance(12, static_cast<std::size_t>(state.range(0)), 19);
    for (auto _ : state) benchmark::DoNotOptimize(exact_opt(inst).cost);
}
BENCHMARK(BM_ExactOpt)->Arg(4)->Arg(6)->Arg(8);

void BM_ParseInstance(benchmark::State& state) {
    std::string text = serialize_instance(bench_instance(200, 400, 23));
    for (auto _ : state) benchmark::DoNotOptimize(parse_instance(text).requests.size());
}
BENCHMARK(BM_ParseInstance);

}  // namespace

BENCHMARK_MAIN();
