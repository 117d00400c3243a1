#include <benchmark/benchmark.h>

#include "altembed/alternation.hpp"
#include "altembed/canonical.hpp"
#include "altembed/genus.hpp"
#include "altembed/obstruction.hpp"
#include "altembed/planarity.hpp"

using namespace altembed;

namespace {

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
        es.emplace_back(i, 5 + i);
    }
    return Graph(10, es);
}

void bm_planarity_petersen(benchmark::State& state) {
    Graph p = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(planar_decision(p));
}
BENCHMARK(bm_planarity_petersen);

void bm_kuratowski_extraction(benchmark::State& state) {
    Graph p = petersen();
    for (auto _ : state) {
        PlanarityResult r = is_planar(p);
        benchmark::DoNotOptimize(r.kuratowski->edges.size());
    }
}
BENCHMARK(bm_kuratowski_extraction);

void bm_min_genus_k6(benchmark::State& state) {
    Graph k6 = Graph::complete(6);
    for (auto _ : state) {
        Budget b = Budget::unlimited();
        benchmark::DoNotOptimize(min_genus(k6, b).genus);
    }
}
BENCHMARK(bm_min_genus_k6);

void bm_genus_exhaust_k5_sum(benchmark::State& state) {
    TerminalGraph k5(Graph::complete(5), 0, 1);
    Graph sum = xy_sum(k5, k5, false).graph();
    for (auto _ : state) {
        Budget b = Budget::unlimited();
        benchmark::DoNotOptimize(min_genus(sum, b).genus);
    }
}
BENCHMARK(bm_genus_exhaust_k5_sum);

void bm_canonical_form(benchmark::State& state) {
    TerminalGraph g(8, {{0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 6}, {6, 7},
                        {2, 4}, {3, 5}, {0, 7}},
                    0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).key());
}
BENCHMARK(bm_canonical_form);

void bm_membership_k33(benchmark::State& state) {
    TerminalGraph g(Graph::complete_bipartite(3, 3), 0, 3);
    for (auto _ : state) benchmark::DoNotOptimize(membership_A1(g).member);
}
BENCHMARK(bm_membership_k33);

void bm_membership_nonmember_sum(benchmark::State& state) {
    TerminalGraph k33(Graph::complete_bipartite(3, 3), 0, 3);
    TerminalGraph sum = xy_sum(k33, k33, false);
    for (auto _ : state) benchmark::DoNotOptimize(membership_A1(sum).member);
}
BENCHMARK(bm_membership_nonmember_sum);

void bm_min_alternation_hexagon(benchmark::State& state) {
    XYLabelledGraph h;
    h.h = Graph::cycle(6);
    h.labels = {kLabelX, kLabelY, kLabelX, kLabelY, kLabelX, kLabelY};
    h.xy_edge = true;
    for (auto _ : state) {
        Budget b = Budget::unlimited();
        benchmark::DoNotOptimize(min_alternation(h, b).min_tau);
    }
}
BENCHMARK(bm_min_alternation_hexagon);

}  // namespace

BENCHMARK_MAIN();
