#include <benchmark/benchmark.h>

#include "hilbfock/classes.hpp"
#include "hilbfock/identities.hpp"

using namespace hilbfock;

namespace {

// Fresh blocks per iteration would only measure the memo, so these
// benchmarks time the first (cold) computation via check_identity /
// basis_matrix calls that recompute from primitive data each run.

void BM_q_block(benchmark::State& state) {
    const int i = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        Operator q = q_general(i);
        benchmark::DoNotOptimize(q.block(n));
    }
}

void BM_basis_matrix_nak_fix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(basis_matrix(n, Basis::nak, Basis::fix));
}

void BM_commutator_check(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_identity("qiqj", Truncation{w}));
}

} // namespace

BENCHMARK(BM_q_block)->Args({2, 4})->Args({3, 4})->Args({4, 4});
BENCHMARK(BM_basis_matrix_nak_fix)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_commutator_check)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
