#include "errfloat/experiments.hpp"

#include <benchmark/benchmark.h>

using namespace errfloat;

namespace {

Fpe lit(FpeContext& ctx, const char* s) { return ctx.literal(s); }

void BM_FpeAdd(benchmark::State& state) {
    EEConfig cfg;
    FpeContext ctx(cfg);
    Fpe a = lit(ctx, "0.6"), b = lit(ctx, "3.14159265358979");
    for (auto _ : state) benchmark::DoNotOptimize(ctx.add(a, b));
}
BENCHMARK(BM_FpeAdd);

void BM_FpeMul(benchmark::State& state) {
    EEConfig cfg;
    FpeContext ctx(cfg);
    Fpe a = lit(ctx, "0.6"), b = lit(ctx, "3.14159265358979");
    for (auto _ : state) benchmark::DoNotOptimize(ctx.mul(a, b));
}
BENCHMARK(BM_FpeMul);

void BM_FpeDiv(benchmark::State& state) {
    EEConfig cfg;
    FpeContext ctx(cfg);
    Fpe a = lit(ctx, "0.6"), b = lit(ctx, "3.14159265358979");
    for (auto _ : state) benchmark::DoNotOptimize(ctx.div(a, b));
}
BENCHMARK(BM_FpeDiv);

void BM_FpeSqrt(benchmark::State& state) {
    EEConfig cfg;
    FpeContext ctx(cfg);
    Fpe a = lit(ctx, "3.14159265358979");
    for (auto _ : state) benchmark::DoNotOptimize(ctx.sqrt(a));
}
BENCHMARK(BM_FpeSqrt);

void BM_Literal(benchmark::State& state) {
    EEConfig cfg;
    FpeContext ctx(cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(ctx.literal("3.14159265358979323846264338327950288"));
}
BENCHMARK(BM_Literal);

void BM_PentagonIterate(benchmark::State& state) {
    EEConfig cfg;
    exp::ProblemSpec spec;
    spec.depth = static_cast<int>(state.range(0));
    spec.delta = "0.05";
    spec.location = exp::Location::pi_sqrt2;
    auto lits = exp::pentagon_literals(spec);
    for (auto _ : state) {
        FpeContext ctx(cfg);
        geom::FpeBackend g(ctx);
        geom::FpePentagon p;
        for (int i = 0; i < 5; ++i)
            p[i] = {ctx.literal(lits[2 * i]), ctx.literal(lits[2 * i + 1])};
        benchmark::DoNotOptimize(geom::iterate(g, p, spec.depth));
    }
}
BENCHMARK(BM_PentagonIterate)->Arg(1)->Arg(2)->Arg(3);

void BM_OracleEval(benchmark::State& state) {
    exp::ProblemSpec spec;
    spec.depth = 2;
    spec.delta = "0.05";
    spec.location = exp::Location::pi_sqrt2;
    for (auto _ : state) benchmark::DoNotOptimize(exp::oracle_eval(spec, 31));
}
BENCHMARK(BM_OracleEval);

}  // namespace
