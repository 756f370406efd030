// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "distkit/kernels.hpp"

namespace {

using namespace distkit;

PointSet random_sphere(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> g;
  std::vector<double> c(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      c[i * d + k] = g(rng);
      s += c[i * d + k] * c[i * d + k];
    }
    for (std::size_t k = 0; k < d; ++k) c[i * d + k] /= std::sqrt(s);
  }
  return PointSet(d, std::move(c));
}

template <bool Parallel>
void BM_Gram(benchmark::State& state) {
  PointSet p = random_sphere(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) {
    auto g = Parallel ? kernels::parallel::gram(p) : kernels::serial::gram(p);
    benchmark::DoNotOptimize(g.data());
  }
}

template <bool Parallel>
void BM_Distances(benchmark::State& state) {
  PointSet p = random_sphere(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) {
    auto d = Parallel ? kernels::parallel::pairwise_sq_distances(p) : kernels::serial::pairwise_sq_distances(p);
    benchmark::DoNotOptimize(d.data());
  }
}

template <bool Parallel>
void BM_Moments(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PointSet p = random_sphere(n, 6);
  Gram<double> g{6, n, kernels::serial::gram(p)};
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  for (auto _ : state) {
    auto m = Parallel ? kernels::parallel::moment_sums(g, w, 8) : kernels::serial::moment_sums(g, w, 8);
    benchmark::DoNotOptimize(m.data());
  }
}

template <bool Parallel>
void BM_GridMin(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto score = [n](std::size_t i, std::size_t j) {
    double x = static_cast<double>(i) / static_cast<double>(n) - 0.3;
    double y = static_cast<double>(j) / static_cast<double>(n) - 0.7;
    return std::hypot(x, y) + 0.01 * std::sin(40.0 * x * y);
  };
  for (auto _ : state) {
    auto r = Parallel ? kernels::parallel::grid_min(n, n, score) : kernels::serial::grid_min(n, n, score);
    benchmark::DoNotOptimize(r.value);
  }
}

}  // namespace

BENCHMARK(BM_Gram<false>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Gram<true>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Distances<false>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Distances<true>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Moments<false>)->Arg(128)->Arg(512);
BENCHMARK(BM_Moments<true>)->Arg(128)->Arg(512);
BENCHMARK(BM_GridMin<false>)->Arg(512)->Arg(2048);
BENCHMARK(BM_GridMin<true>)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
