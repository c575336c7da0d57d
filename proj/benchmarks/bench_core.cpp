#include "mocklab/mocklab.hpp"

#include <benchmark/benchmark.h>

using namespace mocklab;

namespace {

PrecisionContext ctx_for(const benchmark::State& state) {
  return PrecisionContext::with_default_eps(static_cast<unsigned>(state.range(0)));
}

void BM_eval_chi0(benchmark::State& state) {
  const auto ctx = ctx_for(state);
  PrecisionScope scope(ctx);
  const Complex q(Real("0.3"), Real("0.4"));
  const MockThetaId id(MockName::chi0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_mock(id, q, ctx));
  }
}
BENCHMARK(BM_eval_chi0)->Arg(128)->Arg(256)->Arg(512);

void BM_eval_omega_near_boundary(benchmark::State& state) {
  const auto ctx = ctx_for(state);
  PrecisionScope scope(ctx);
  const Complex q(exp(-Real("0.05")));
  const MockThetaId id(MockName::omega);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_mock(id, q, ctx));
  }
}
BENCHMARK(BM_eval_omega_near_boundary)->Arg(256);

void BM_series_expand(benchmark::State& state) {
  const MockThetaId id(MockName::chi0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_expand(id, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_series_expand)->Arg(100)->Arg(400);

void BM_partitions(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_inverse_coeffs(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_partitions)->Arg(1000)->Arg(10000);

void BM_eta(benchmark::State& state) {
  const auto ctx = ctx_for(state);
  PrecisionScope scope(ctx);
  const Complex tau(Real("0.2"), Real("1.1"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eta(tau, ctx));
  }
}
BENCHMARK(BM_eta)->Arg(256);

void BM_w3(benchmark::State& state) {
  const auto ctx = ctx_for(state);
  PrecisionScope scope(ctx);
  const Complex alpha(Real(1), Real("0.5"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(w3_integral(alpha, ctx));
  }
}
BENCHMARK(BM_w3)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_l_vector(benchmark::State& state) {
  const auto ctx = ctx_for(state);
  PrecisionScope scope(ctx);
  const Complex alpha(Real(2), Real(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(l_vector(alpha, ctx));
  }
}
BENCHMARK(BM_l_vector)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_pv_quadrature(benchmark::State& state) {
  const auto ctx = ctx_for(state);
  PrecisionScope scope(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pv_quadrature(Real("0.3"), Real("1.5"), Real("0.8"), ctx));
  }
}
BENCHMARK(BM_pv_quadrature)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_mf5_matrix_check(benchmark::State& state) {
  const auto ctx = ctx_for(state);
  PrecisionScope scope(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_mf5_matrix(Complex(Real(1)), ctx));
  }
}
BENCHMARK(BM_mf5_matrix_check)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
