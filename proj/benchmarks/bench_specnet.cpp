#include <benchmark/benchmark.h>

#include "specnet/community.hpp"
#include "specnet/dcbm.hpp"
#include "specnet/kmeans.hpp"
#include "specnet/linalg.hpp"
#include "specnet/metrics.hpp"
#include "specnet/rng.hpp"

using namespace specnet;

namespace {

Graph dcbm_graph(int n, bool directed, std::uint64_t seed) {
    DcbmParams params = equal_block_params(n, 3, 0.2, 0.02, 0.5, 1.5, directed, seed);
    if (directed) return sample_directed(params, seed).first;
    return sample_undirected(params, seed).first;
}

}  // namespace

static void BM_ConnectedComponents(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(7);
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 4 * n; ++i) {
        edges.emplace_back(static_cast<int>(rng.uniform_int(n)),
                           static_cast<int>(rng.uniform_int(n)));
    }
    Graph g(n, false, edges);
    for (auto _ : state) {
        benchmark::DoNotOptimize(connected_components(g));
    }
}
BENCHMARK(BM_ConnectedComponents)->Arg(10000)->Arg(100000);

static void BM_TopEigs(benchmark::State& state) {
    Graph g = dcbm_graph(static_cast<int>(state.range(0)), false, 3);
    LinOp op = adjacency_operator(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(top_k_eigs_symmetric(op, 3));
    }
}
BENCHMARK(BM_TopEigs)->Arg(600)->Arg(2000);

static void BM_TopSvd(benchmark::State& state) {
    Graph g = dcbm_graph(static_cast<int>(state.range(0)), true, 5);
    LinOp op = adjacency_operator(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(top_k_svd(op, 3));
    }
}
BENCHMARK(BM_TopSvd)->Arg(600);

static void BM_Kmeans(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(11);
    DenseMatrix points(n, 2);
    for (double& v : points.data) v = rng.uniform01();
    for (auto _ : state) {
        benchmark::DoNotOptimize(kmeans(points, 3, 100, 42));
    }
}
BENCHMARK(BM_Kmeans)->Arg(600)->Arg(2500);

static void BM_Score(benchmark::State& state) {
    Graph g = dcbm_graph(static_cast<int>(state.range(0)), false, 9);
    auto [giant, map] = induced_subgraph(g, largest_component_nodes(g));
    for (auto _ : state) {
        benchmark::DoNotOptimize(score(giant, 3, 42));
    }
}
BENCHMARK(BM_Score)->Arg(600)->Arg(2000);

static void BM_Dscore(benchmark::State& state) {
    Graph g = dcbm_graph(static_cast<int>(state.range(0)), true, 13);
    auto [giant, map] = induced_subgraph(g, largest_component_nodes(g));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dscore(giant, 3, 42));
    }
}
BENCHMARK(BM_Dscore)->Arg(600);

static void BM_Betweenness(benchmark::State& state) {
    Graph g = dcbm_graph(static_cast<int>(state.range(0)), false, 17);
    auto [giant, map] = induced_subgraph(g, largest_component_nodes(g));
    for (auto _ : state) {
        benchmark::DoNotOptimize(betweenness_centrality(giant));
    }
}
BENCHMARK(BM_Betweenness)->Arg(600);

BENCHMARK_MAIN();
