#include <benchmark/benchmark.h>

#include "hilbfock/localization.hpp"
#include "hilbfock/ratfunc.hpp"

using namespace hilbfock;

namespace {

BiPoly tan_poly(int n, int which) {
    const auto& parts = partitions_of(n);
    return tan_product(parts[which % parts.size()]);
}

void BM_poly_gcd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BiPoly a = tan_poly(n, 0) * tan_poly(n, 1);
    BiPoly b = tan_poly(n, 1) * tan_poly(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}

void BM_ratfunc_add(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RatFunc a(BiPoly::one(), tan_poly(n, 0));
    RatFunc b(BiPoly::one(), tan_poly(n, 1));
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}

void BM_ratfunc_mul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RatFunc a(tan_poly(n, 0), tan_poly(n, 1));
    RatFunc b(tan_poly(n, 1), tan_poly(n, 2));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

} // namespace

BENCHMARK(BM_poly_gcd)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_ratfunc_add)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_ratfunc_mul)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
