#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qdl/checkers.hpp"
#include "qdl/qcat.hpp"
#include "qdl/quantale.hpp"
#include "qdl/tnorm.hpp"

namespace {

using namespace qdl;

OrdinalSumTNorm mixed_tnorm() {
  return OrdinalSumTNorm({Component{Rat(0), Rat(1, 4), ComponentKind::lukasiewicz},
                          Component{Rat(1, 2), Rat(1), ComponentKind::product}});
}

std::vector<Rat> sample_points(int n) {
  std::mt19937 rng(7);
  std::vector<Rat> out;
  for (int i = 0; i < n; ++i) {
    const int den = 1 + static_cast<int>(rng() % 64);
    out.emplace_back(static_cast<int>(rng() % (den + 1)), den);
  }
  return out;
}

void bm_tnorm_eval(benchmark::State& state) {
  const auto t = mixed_tnorm();
  const auto pts = sample_points(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const Rat& x = pts[i % pts.size()];
    const Rat& y = pts[(i * 7 + 3) % pts.size()];
    benchmark::DoNotOptimize(eval(t, x, y));
    ++i;
  }
}
BENCHMARK(bm_tnorm_eval);

void bm_tnorm_residuum(benchmark::State& state) {
  const auto t = mixed_tnorm();
  const auto pts = sample_points(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const Rat& x = pts[i % pts.size()];
    const Rat& y = pts[(i * 11 + 5) % pts.size()];
    benchmark::DoNotOptimize(residuum(t, x, y));
    ++i;
  }
}
BENCHMARK(bm_tnorm_residuum);

void bm_scan_offdiagonal(benchmark::State& state) {
  const OrdinalSumTNorm t({Component{Rat(1, 2), Rat(1), ComponentKind::lukasiewicz}});
  for (auto _ : state) benchmark::DoNotOptimize(scan_offdiagonal(t, Rat(1, 64), Rat(1, 8)));
}
BENCHMARK(bm_scan_offdiagonal);

QCategory boolean_cube() {
  QCategory a;
  a.q = FiniteQuantale::standard_boolean();
  const int truth = a.q->top(), falsity = a.q->bottom();
  for (int i = 0; i < 8; ++i) a.objects.push_back("s" + std::to_string(i));
  a.hom.assign(8, std::vector<int>(8, falsity));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if ((i & ~j) == 0) a.hom[i][j] = truth;
  return a;
}

void bm_enumerate_weights(benchmark::State& state) {
  const auto cube = boolean_cube();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_weights(cube));
}
BENCHMARK(bm_enumerate_weights);

void bm_completely_distributive_cube(benchmark::State& state) {
  const auto cube = boolean_cube();
  for (auto _ : state) benchmark::DoNotOptimize(is_completely_distributive(cube));
}
BENCHMARK(bm_completely_distributive_cube);

}  // namespace

BENCHMARK_MAIN();
