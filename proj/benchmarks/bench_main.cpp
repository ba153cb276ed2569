#include <numeric>
#include <random>

#include <benchmark/benchmark.h>

#include "obembed/homology.hpp"
#include "obembed/lens.hpp"
#include "obembed/spun.hpp"

using namespace obembed;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = d(rng);
  return m;
}

void BM_SmithDiagonal(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(h1_invariants(m));
}
BENCHMARK(BM_SmithDiagonal)->Arg(4)->Arg(8)->Arg(16);

void BM_PlumbingDeterminant(benchmark::State& state) {
  auto n = state.range(0);
  auto c = cf_expand(n + 1, n);  // all -2, length n
  auto m = plumbing_matrix(c);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_PlumbingDeterminant)->Arg(16)->Arg(128)->Arg(499);

void BM_SlidDeterminant(benchmark::State& state) {
  auto n = state.range(0);
  auto m = difference_congruence(slid_diagram(cf_expand(n + 1, n)).linking_matrix());
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_SlidDeterminant)->Arg(16)->Arg(128)->Arg(499);

void BM_DenseDeterminant(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_DenseDeterminant)->Arg(8)->Arg(32);

void BM_LensSweep(benchmark::State& state) {
  const auto max_p = state.range(0);
  for (auto _ : state) {
    for (std::int64_t p = 2; p <= max_p; ++p)
      for (std::int64_t q = 1; q < p; ++q)
        if (std::gcd(p, q) == 1) benchmark::DoNotOptimize(lens_embedding_target(p, q));
  }
}
BENCHMARK(BM_LensSweep)->Arg(50)->Arg(200);

void BM_EmbeddingTarget(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::vector<Letter> letters;
  for (int k = 0; k < 4 * n; ++k) {
    std::vector<int> holes;
    for (int i = 1; i <= n; ++i)
      if (rng() % 2) holes.push_back(i);
    if (holes.empty()) holes.push_back(1);
    letters.push_back(twist(CurveClass(holes), static_cast<std::int64_t>(rng() % 7) - 3));
  }
  TwistWord w(PlanarPage(n), letters);
  for (auto _ : state) benchmark::DoNotOptimize(embedding_target(w));
}
BENCHMARK(BM_EmbeddingTarget)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
