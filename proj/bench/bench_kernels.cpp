#include "prefdiag/clustering.hpp"
#include "prefdiag/kernels.hpp"
#include "prefdiag/random.hpp"
#include "prefdiag/similarity.hpp"
#include "prefdiag/synth.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace prefdiag;

namespace {

Dataset synthetic(std::size_t items, std::size_t subjects) {
    SynthParams p;
    p.num_items = items;
    p.num_subjects = subjects;
    p.num_planted_clusters = 8;
    return generate(p).dataset;
}

std::vector<kernels::Vec2> scatter(std::size_t n) {
    Rng rng(derive_seed(1, "bench"));
    std::vector<kernels::Vec2> pos(n);
    for (auto& v : pos) v = {1000.0 * uniform_unit(rng), 1000.0 * uniform_unit(rng)};
    return pos;
}

template <void (*Kernel)(const kernels::Incidence&, std::span<double>)>
void BM_Jaccard(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto inc = kernels::build_incidence(synthetic(n, 4 * n));
    std::vector<double> out(n * n);
    for (auto _ : state) {
        Kernel(inc, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

template <void (*Kernel)(std::span<const kernels::Vec2>, double, std::span<kernels::Vec2>, std::span<double>)>
void BM_Repulsion(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto pos = scatter(n);
    std::vector<kernels::Vec2> force(n);
    std::vector<double> stiffness(n);
    for (auto _ : state) {
        Kernel(pos, 2e4, force, stiffness);
        benchmark::DoNotOptimize(force.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

void BM_KMedoids(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto sim = similarity_matrix(synthetic(n, 4 * n));
    for (auto _ : state) {
        auto c = k_medoids(sim, {8, 42, 100, 10});
        benchmark::DoNotOptimize(c.objective);
    }
}

}  // namespace

BENCHMARK_TEMPLATE(BM_Jaccard, kernels::jaccard_matrix_serial)->Arg(50)->Arg(500)->Arg(2000);
BENCHMARK_TEMPLATE(BM_Jaccard, kernels::jaccard_matrix)->Arg(50)->Arg(500)->Arg(2000);
BENCHMARK_TEMPLATE(BM_Repulsion, kernels::repulsion_serial)->Arg(100)->Arg(1000)->Arg(4000);
BENCHMARK_TEMPLATE(BM_Repulsion, kernels::repulsion)->Arg(100)->Arg(1000)->Arg(4000);
BENCHMARK(BM_KMedoids)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
