// OpenMP kernels against their serial references.

#include <random>

#include <benchmark/benchmark.h>

#include "vpt/evaluation.hpp"
#include "vpt/kernels.hpp"

using namespace vpt;
namespace k = vpt::kernels;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(rows, cols);
  for (double& v : m.values()) v = u(rng);
  return m;
}

template <bool Parallel, k::Trans TB>
void BM_Gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  Matrix c;
  for (auto _ : state) {
    if constexpr (Parallel) k::gemm(a, k::Trans::kNo, b, TB, c);
    else k::ref::gemm(a, k::Trans::kNo, b, TB, c);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

template <bool Parallel>
void BM_Softmax(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix src = random_matrix(n, n, 3);
  for (auto _ : state) {
    Matrix m = src;
    if constexpr (Parallel) k::softmax_rows(m);
    else k::ref::softmax_rows(m);
    benchmark::DoNotOptimize(m.data());
  }
}

template <bool Parallel>
void BM_Ranks(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix s = random_matrix(n, n, 4);
  for (auto _ : state) {
    RetrievalMetrics m = Parallel ? retrieval_metrics(s) : ref::retrieval_metrics(s);
    benchmark::DoNotOptimize(m.mean_rank_im2txt);
  }
}

}  // namespace

BENCHMARK(BM_Gemm<false, k::Trans::kNo>)->Name("gemm_nn/serial")->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_Gemm<true, k::Trans::kNo>)->Name("gemm_nn/omp")->Arg(64)->Arg(256)->Arg(512)->UseRealTime();
BENCHMARK(BM_Gemm<false, k::Trans::kYes>)->Name("gemm_nt/serial")->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_Gemm<true, k::Trans::kYes>)->Name("gemm_nt/omp")->Arg(64)->Arg(256)->Arg(512)->UseRealTime();
BENCHMARK(BM_Softmax<false>)->Name("softmax/serial")->Arg(256)->Arg(1024);
BENCHMARK(BM_Softmax<true>)->Name("softmax/omp")->Arg(256)->Arg(1024)->UseRealTime();
BENCHMARK(BM_Ranks<false>)->Name("ranks/serial")->Arg(256)->Arg(1024);
BENCHMARK(BM_Ranks<true>)->Name("ranks/omp")->Arg(256)->Arg(1024)->UseRealTime();

BENCHMARK_MAIN();
