#include <benchmark/benchmark.h>

#include "stagger/complex.hpp"
#include "stagger/purity.hpp"

using namespace stagger;

namespace {

Stratum axis_complement(int n) {
    std::vector<int> idx;
    for (int i = 2; i <= n; ++i) idx.push_back(i);
    return Stratum::from_indices(n, idx);
}

// structure module of the first coordinate axis, resolved over A^n
void BM_ResolveAxis(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto m = closure_structure_module(n, axis_complement(n));
    for (auto _ : state) benchmark::DoNotOptimize(free_resolution(m, n));
}
BENCHMARK(BM_ResolveAxis)->DenseRange(2, 5);

void BM_TensorOfAxes(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> last;
    for (int i = 1; i < n; ++i) last.push_back(i);
    const auto a = stratum_sheaf(n, axis_complement(n));
    const auto b = stratum_sheaf(n, Stratum::from_indices(n, last));
    for (auto _ : state) benchmark::DoNotOptimize(tensorL(a, b));
}
BENCHMARK(BM_TensorOfAxes)->DenseRange(2, 5);

void BM_DualOfTensor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto setup = TorusSetup::global_linear(n, std::vector<Int>(static_cast<std::size_t>(n), 1));
    const auto a = stratum_sheaf(n, axis_complement(n));
    const auto t = tensorL(a, a);
    for (auto _ : state) benchmark::DoNotOptimize(dualize(setup, t));
}
BENCHMARK(BM_DualOfTensor)->DenseRange(2, 4);

void BM_CohomologyOfSelfTensor(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = stratum_sheaf(n, axis_complement(n));
    const auto t = tensorL(a, a);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(t));
}
BENCHMARK(BM_CohomologyOfSelfTensor)->DenseRange(2, 4);

}  // namespace
BENCHMARK_MAIN();
