#include <benchmark/benchmark.h>

#include <random>

#include "bdf/inner.hpp"
#include "bdf/kernels.hpp"

namespace {

bdf::Matrix synthesis_like(bdf::Index n) {
  std::mt19937_64 rng(7);
  return bdf::random_gaussian(rng, n, 2 * n);
}

template <bdf::Matrix (*Kernel)(const bdf::Matrix&)>
void BM_matrix_kernel(benchmark::State& state) {
  const bdf::Matrix u = synthesis_like(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(u));
}

template <double (*Kernel)(const bdf::BidiscPoly&, int)>
void BM_torus(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const bdf::InnerPoly ip = bdf::build_inner(
      bdf::InnerSpec::product({bdf::InnerSpec::blaschke_z({{0.4, 0.1}}), bdf::InnerSpec::blaschke_w({{-0.3, 0.0}})}),
      {order, order});
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ip.poly, 64));
}

}  // namespace

BENCHMARK(BM_matrix_kernel<bdf::kernels::serial::frame_operator>)->Name("frame_operator/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_matrix_kernel<bdf::kernels::omp::frame_operator>)->Name("frame_operator/omp")->Arg(64)->Arg(256);
BENCHMARK(BM_matrix_kernel<bdf::kernels::serial::gram>)->Name("gram/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_matrix_kernel<bdf::kernels::omp::gram>)->Name("gram/omp")->Arg(64)->Arg(256);
BENCHMARK(BM_torus<bdf::kernels::serial::torus_deviation>)->Name("torus_deviation/serial")->Arg(8)->Arg(24);
BENCHMARK(BM_torus<bdf::kernels::omp::torus_deviation>)->Name("torus_deviation/omp")->Arg(8)->Arg(24);

BENCHMARK_MAIN();
