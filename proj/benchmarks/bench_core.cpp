#include <benchmark/benchmark.h>

#include "fpdet/checks.hpp"
#include "fpdet/lucas.hpp"
#include "fpdet/matrix.hpp"
#include "fpdet/polyreduce.hpp"

using namespace fpdet;

namespace {

std::uint64_t largest_prime_below(std::uint64_t bound) {
    for (std::uint64_t n = bound - 1;; --n)
        if (is_prime(n)) return n;
}

void BM_BuildDminus(benchmark::State& state) {
    const PrimeCtx ctx(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        auto m = build_matrix(MatrixKind::dminus, ctx, {2, 2});
        benchmark::DoNotOptimize(m.entries.data());
    }
}
BENCHMARK(BM_BuildDminus)->Arg(101)->Arg(251)->Arg(503);

void BM_DetDminus(benchmark::State& state) {
    const PrimeCtx ctx(static_cast<std::uint64_t>(state.range(0)));
    const FpMatrix m = build_matrix(MatrixKind::dminus, ctx, {2, 2});
    for (auto _ : state) {
        Residue d = det_mod(m);
        benchmark::DoNotOptimize(d);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DetDminus)->Arg(101)->Arg(251)->Arg(503)->Complexity();

void BM_ReducePowerForm(benchmark::State& state) {
    const PrimeCtx ctx(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        auto poly = reduce_power_form(ctx, {3, 1});
        benchmark::DoNotOptimize(poly.coeffs.data());
    }
}
BENCHMARK(BM_ReducePowerForm)->Arg(101)->Arg(503)->Arg(1009);

void BM_HatReduction(benchmark::State& state) {
    const PrimeCtx ctx(static_cast<std::uint64_t>(state.range(0)));
    const ReducedPoly poly = reduce_power_form(ctx, {3, 1});
    for (auto _ : state) {
        auto hat = reduced_det_from_coeffs(poly);
        benchmark::DoNotOptimize(hat.value);
    }
}
BENCHMARK(BM_HatReduction)->Arg(503)->Arg(1009);

void BM_LucasIterative(benchmark::State& state) {
    const PrimeCtx ctx(1009);
    for (auto _ : state) {
        auto uv = lucas_uv_mod({-2, 2}, static_cast<std::uint64_t>(state.range(0)), ctx);
        benchmark::DoNotOptimize(uv.u);
    }
}
BENCHMARK(BM_LucasIterative)->Arg(1000)->Arg(100000);

void BM_ClosedFormU(benchmark::State& state) {
    const PrimeCtx ctx(1009);
    for (auto _ : state) {
        Residue u = closed_form_u(ClosedFormVariant::u22,
                                  static_cast<std::uint64_t>(state.range(0)), ctx);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_ClosedFormU)->Arg(1000)->Arg(100000);

void BM_Legendre(benchmark::State& state) {
    const PrimeCtx ctx(largest_prime_below(PrimeCtx::kDefaultMaxP));
    std::int64_t a = 2;
    for (auto _ : state) {
        int sym = ctx.legendre(a++);
        benchmark::DoNotOptimize(sym);
    }
}
BENCHMARK(BM_Legendre);

}  // namespace

BENCHMARK_MAIN();
