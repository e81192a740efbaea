#include <benchmark/benchmark.h>

#include "gonalis/matrix.hpp"
#include "gonalis/rng.hpp"

namespace {

using namespace gonalis;

// Measures dense rank computation over GF(10007), the inner loop of every
// graded kernel and Koszul rank in the engine.
void BM_FpRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Fp F(10007);
  Rng rng(12345, "bench-rank");
  Mat<Fp> M(n, n + n / 4, F);
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) M.at(i, j) = F.random(rng);
  for (auto _ : state) {
    Mat<Fp> copy = M;
    benchmark::DoNotOptimize(rank_destructive(F, copy));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FpRank)->Arg(64)->Arg(256)->Arg(512)->Complexity();

void BM_FpAxpy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Fp F(10007);
  Rng rng(999, "bench-axpy");
  std::vector<std::uint32_t> x(n), y(n);
  for (auto& v : x) v = F.random(rng);
  for (auto& v : y) v = F.random(rng);
  for (auto _ : state) {
    fp_axpy(F.modulus(), 1234, x.data(), y.data(), n);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * n * sizeof(std::uint32_t));
}
BENCHMARK(BM_FpAxpy)->Arg(1 << 10)->Arg(1 << 14);

}  // namespace

BENCHMARK_MAIN();
