#include <benchmark/benchmark.h>

#include "tetra/feynman.hpp"
#include "tetra/identities.hpp"
#include "tetra/polylog.hpp"
#include "tetra/pslq.hpp"
#include "tetra/quad.hpp"

using namespace tetra;

static void BM_Cl2(benchmark::State& state) {
  const PrecisionCtx ctx(static_cast<int>(state.range(0)));
  const Real t = rational(7, 5, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(cl2(t, ctx));
}
BENCHMARK(BM_Cl2)->Arg(50)->Arg(200)->Arg(1000);

static void BM_Cl2ViaLi2(benchmark::State& state) {
  const PrecisionCtx ctx(static_cast<int>(state.range(0)));
  const Real t = rational(7, 5, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(cl2_via_li2(t, ctx));
}
BENCHMARK(BM_Cl2ViaLi2)->Arg(50)->Arg(200);

static void BM_Li2Complex(benchmark::State& state) {
  const PrecisionCtx ctx(static_cast<int>(state.range(0)));
  const Complex z(rational(1, 2, ctx), rational(1, 3, ctx));
  for (auto _ : state) benchmark::DoNotOptimize(li2(z, ctx));
}
BENCHMARK(BM_Li2Complex)->Arg(50)->Arg(200);

static void BM_QuadLog(benchmark::State& state) {
  const PrecisionCtx ctx(static_cast<int>(state.range(0)));
  const Real tol = pow10(-(ctx.digits() - 10), ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate([](const Real& x) { return log(x); }, Finite{Real(ctx), Real(1L, ctx)}, tol, ctx));
  }
}
BENCHMARK(BM_QuadLog)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_CClosed(benchmark::State& state) {
  const PrecisionCtx ctx(static_cast<int>(state.range(0)));
  const MassPair m = make_mass_pair(1L / const_pi(ctx), 1L / exp(Real(1L, ctx)), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(c_closed(m, ctx));
}
BENCHMARK(BM_CClosed)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

static void BM_CDirect(benchmark::State& state) {
  const PrecisionCtx ctx(50);
  const MassPair m = make_mass_pair(1L / const_pi(ctx), 1L / exp(Real(1L, ctx)), ctx);
  const Real tol = pow10(-35, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(c_direct(m, tol, ctx));
}
BENCHMARK(BM_CDirect)->Unit(benchmark::kMillisecond);

static void BM_Stepwise(benchmark::State& state) {
  const PrecisionCtx ctx(50);
  const MassPair m = make_mass_pair(1L / const_pi(ctx), 1L / exp(Real(1L, ctx)), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(stepwise(m, ctx));
}
BENCHMARK(BM_Stepwise)->Unit(benchmark::kMillisecond);

static void BM_PslqConjectureVector(benchmark::State& state) {
  const PrecisionCtx ctx(static_cast<int>(state.range(0)));
  std::vector<Real> xs;
  for (const ClausenValue& v : conj14_values(ctx)) xs.push_back(v.value);
  const Real max_norm(1000000L, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(find_relation(xs, max_norm, ctx));
}
BENCHMARK(BM_PslqConjectureVector)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_PslqRandomExclusion(benchmark::State& state) {
  const PrecisionCtx ctx(100);
  std::vector<Real> xs;
  for (long i = 2; i < 10; ++i) xs.push_back(log(Real(i * i + 1, ctx)));
  const Real max_norm(10000L, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(find_relation(xs, max_norm, ctx));
}
BENCHMARK(BM_PslqRandomExclusion)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
