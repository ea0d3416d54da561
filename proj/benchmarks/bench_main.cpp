#include <benchmark/benchmark.h>

#include <random>

#include "malcev/bch.hpp"
#include "malcev/cech.hpp"
#include "malcev/cosimplicial.hpp"
#include "malcev/lie_algebra.hpp"
#include "malcev/matrix.hpp"
#include "malcev/subspace.hpp"
#include "malcev/weights.hpp"

namespace {

malcev::Matrix random_sparse(int n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  malcev::Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng) < density) m.set(i, j, malcev::Rational(entry(rng)));
  return m;
}

void BM_rref(benchmark::State& state) {
  malcev::Matrix m = random_sparse(static_cast<int>(state.range(0)), 0.3, 42);
  for (auto _ : state) {
    auto rr = malcev::rref(m);
    benchmark::DoNotOptimize(rr.pivot_cols.size());
  }
}
BENCHMARK(BM_rref)->Arg(20)->Arg(40);

void BM_kernel(benchmark::State& state) {
  malcev::Matrix m = random_sparse(static_cast<int>(state.range(0)), 0.25, 7);
  for (auto _ : state) {
    auto k = malcev::kernel(m);
    benchmark::DoNotOptimize(k.dim());
  }
}
BENCHMARK(BM_kernel)->Arg(30);

malcev::AlgebraPtr two_generator_algebra(int class_bound) {
  return malcev::GradedLieAlgebra::free_nilpotent({{"x", -1}, {"y", -1}}, class_bound);
}

void BM_hall_build(benchmark::State& state) {
  const int cls = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto alg = two_generator_algebra(cls);
    benchmark::DoNotOptimize(alg->total_dim());
  }
}
BENCHMARK(BM_hall_build)->Arg(5)->Arg(7);

void BM_bch_generators(benchmark::State& state) {
  auto alg = two_generator_algebra(static_cast<int>(state.range(0)));
  malcev::LieElement x = alg->generator("x");
  malcev::LieElement y = alg->generator("y");
  for (auto _ : state) {
    malcev::LieElement z = malcev::bch(x, y);
    benchmark::DoNotOptimize(z.total_coords().size());
  }
}
BENCHMARK(BM_bch_generators)->Arg(4)->Arg(5);

void BM_bch_dense(benchmark::State& state) {
  auto alg = two_generator_algebra(static_cast<int>(state.range(0)));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-3, 3);
  malcev::Vec a(alg->total_dim()), b(alg->total_dim());
  for (auto& c : a) c = malcev::Rational(num(rng), 2);
  for (auto& c : b) c = malcev::Rational(num(rng), 3);
  malcev::LieElement x = alg->from_total_coords(a);
  malcev::LieElement y = alg->from_total_coords(b);
  for (auto _ : state) {
    malcev::LieElement z = malcev::bch(x, y);
    benchmark::DoNotOptimize(z.total_coords().size());
  }
}
BENCHMARK(BM_bch_dense)->Arg(5);

void BM_weight_decomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  malcev::Matrix f(n, n);
  for (int i = 0; i < n; ++i) f.set(i, i, malcev::Rational(1 + (i % 3 == 0 ? 4 : 0)));
  for (int i = 0; i + 1 < n; ++i) f.set(i, i + 1, malcev::Rational(1));
  malcev::WeilOptions opt;
  opt.q = 5;
  for (auto _ : state) {
    auto dec = malcev::frobenius_weight_decomposition(f, opt);
    benchmark::DoNotOptimize(dec.total_dim());
  }
}
BENCHMARK(BM_weight_decomposition)->Arg(8)->Arg(12);

void BM_cech_cohomology(benchmark::State& state) {
  malcev::CosimplicialAlgebra bar = malcev::bar_complex(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto H = malcev::cohomology(bar.space());
    benchmark::DoNotOptimize(H.dims.size());
  }
}
BENCHMARK(BM_cech_cohomology)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
