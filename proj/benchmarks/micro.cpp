#include <benchmark/benchmark.h>

#include "quatinv/geninv.hpp"
#include "quatinv/random.hpp"
#include "quatinv/svd.hpp"

namespace {

using quatinv::PinvAlgorithm;
using quatinv::QMatrix;
using quatinv::Route;

QMatrix input(std::size_t n, std::uint64_t seed) {
  quatinv::Rng rng(seed);
  return quatinv::random_uniform(n, n, rng);
}

void bm_qsvd(benchmark::State& state, Route route) {
  const QMatrix a = input(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(quatinv::qsvd(a, route));
}

void bm_pinv(benchmark::State& state, PinvAlgorithm alg) {
  const QMatrix a = input(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(quatinv::pinv(a, alg));
}

void bm_outer_right(benchmark::State& state, Route route) {
  const auto k = static_cast<std::size_t>(state.range(0));
  quatinv::Rng rng(3);
  const QMatrix a = quatinv::random_uniform(2 * k, 2 * k, rng);
  const QMatrix s = quatinv::random_uniform(2 * k, k, rng);
  const QMatrix t = quatinv::random_uniform(k, 2 * k, rng);
  quatinv::GenInvOptions opt;
  opt.route = route;
  for (auto _ : state) benchmark::DoNotOptimize(quatinv::outer_right(a, s, t, opt));
}

}  // namespace

BENCHMARK_CAPTURE(bm_qsvd, direct, Route::direct)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(bm_qsvd, crep, Route::crep)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(bm_pinv, svd_direct, PinvAlgorithm::svd_direct)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(bm_pinv, svd_crep, PinvAlgorithm::svd_crep)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(bm_pinv, frd_direct, PinvAlgorithm::frd_direct)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(bm_pinv, frd_crep, PinvAlgorithm::frd_crep)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(bm_outer_right, direct, Route::direct)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(bm_outer_right, crep, Route::crep)->Arg(5)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
