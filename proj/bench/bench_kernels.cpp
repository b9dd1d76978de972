// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "piltz/field_io.hpp"
#include "piltz/sieve.hpp"

using namespace piltz;

namespace {

const FieldDescriptor& field_for(std::int64_t index) {
    static const FieldDescriptor fields[] = {find_field("Qi"), find_field("cubic23")};
    return fields[index];
}

void BM_sieve_dk_serial(benchmark::State& state) {
    const auto& K = field_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(serial::sieve_dk(K, state.range(1)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_sieve_dk_parallel(benchmark::State& state) {
    const auto& K = field_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sieve_dk(K, state.range(1)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_sieve_mobius_serial(benchmark::State& state) {
    const auto& K = field_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(serial::sieve_mobius(K, state.range(1)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_sieve_mobius_parallel(benchmark::State& state) {
    const auto& K = field_for(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sieve_mobius(K, state.range(1)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_convolve_serial(benchmark::State& state) {
    const auto dk = sieve_dk(field_for(state.range(0)), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(serial::dirichlet_convolve(dk, dk));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_convolve_parallel(benchmark::State& state) {
    const auto dk = sieve_dk(field_for(state.range(0)), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_convolve(dk, dk));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void sizes(benchmark::internal::Benchmark* b) {
    for (std::int64_t field : {0, 1})
        for (std::int64_t x : {1 << 18, 1 << 21}) b->Args({field, x});
    b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_sieve_dk_serial)->Apply(sizes);
BENCHMARK(BM_sieve_dk_parallel)->Apply(sizes);
BENCHMARK(BM_sieve_mobius_serial)->Apply(sizes);
BENCHMARK(BM_sieve_mobius_parallel)->Apply(sizes);
BENCHMARK(BM_convolve_serial)->Apply(sizes);
BENCHMARK(BM_convolve_parallel)->Apply(sizes);

BENCHMARK_MAIN();
