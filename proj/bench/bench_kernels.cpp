#include <benchmark/benchmark.h>

#include "capelli/instances.hpp"
#include "capelli/matrix.hpp"

using namespace capelli;

namespace {

// Capelli operator matrix Z D^t + shifts over complex variables.
WeylMatrix capelli_matrix(std::size_t n) {
    auto p = complex_capelli_pair(MatrixKind::plain, n);
    return p.Z * p.D.transpose() + WeylMatrix::diag(capelli_shifts(n), p.Z.proto());
}

WeylElement product_operand(std::size_t n) { return coldet(capelli_matrix(n)); }

void BM_MulSerial(benchmark::State& state) {
    auto a = product_operand(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mul_serial(a, a));
    state.counters["terms"] = double(a.term_count());
}

void BM_MulParallel(benchmark::State& state) {
    auto a = product_operand(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(a, a, 0, 0));
    state.counters["terms"] = double(a.term_count());
}

void BM_ColdetSerial(benchmark::State& state) {
    auto M = decomplexify(capelli_matrix(std::size_t(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(coldet_serial(M));
}

void BM_ColdetParallel(benchmark::State& state) {
    auto M = decomplexify(capelli_matrix(std::size_t(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(coldet(M));
}

} // namespace

BENCHMARK(BM_MulSerial)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColdetSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColdetParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
