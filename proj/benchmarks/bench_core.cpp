#include <benchmark/benchmark.h>

#include "uam/extend.hpp"

using namespace uam;

namespace {

CurveModel cubic() { return curve_new(Poly({1, 0, 0, 1}), 1); }
CurveModel quintic() { return curve_new(Poly({1, 0, 0, 0, 0, 1}), 2); }

void BM_extend_g1(benchmark::State& state) {
  CurveModel C = cubic();
  for (auto _ : state) benchmark::DoNotOptimize(log_extend(C, (int)state.range(0)));
}
BENCHMARK(BM_extend_g1)->Arg(2)->Arg(3)->Arg(4);

void BM_extend_g2(benchmark::State& state) {
  CurveModel C = quintic();
  for (auto _ : state) benchmark::DoNotOptimize(log_extend(C, (int)state.range(0)));
}
BENCHMARK(BM_extend_g2)->Arg(2)->Arg(3);

void BM_conn_prime_g1(benchmark::State& state) {
  CurveModel C = cubic();
  LogExtension e = log_extend(C, (int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conn_prime_matrix(e, e.level));
}
BENCHMARK(BM_conn_prime_g1)->Arg(2)->Arg(3);

void BM_gauge_check_g1(benchmark::State& state) {
  CurveModel C = cubic();
  int n = (int)state.range(0);
  LogExtension e = log_extend(C, n);
  GaugeMat G = gauge_matrix(e, n);
  ConnMat U = universal_conn_matrix(C, n);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_of_connection(U, G, C));
}
BENCHMARK(BM_gauge_check_g1)->Arg(2)->Arg(3);

void BM_pi_expansion(benchmark::State& state) {
  CurveModel C = quintic();
  for (auto _ : state) {
    Expander ex(C, (int)state.range(0));
    benchmark::DoNotOptimize(ex.ys);
  }
}
BENCHMARK(BM_pi_expansion)->Arg(32)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
