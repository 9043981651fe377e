#include <benchmark/benchmark.h>

#include <cmath>

#include "stieltjes/duality.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/multiquad.hpp"
#include "stieltjes/quad.hpp"
#include "stieltjes/series.hpp"
#include "stieltjes/specfun.hpp"

namespace {

using namespace stieltjes;

void BM_AdaptiveLogCot(benchmark::State& state) {
  Fn1D f;
  f.a = 0.0;
  f.b = specfun::kPi / 4.0;
  f.singular_a = true;
  f.eval = [](double u) { return std::log(1.0 / std::tan(u)); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::integrate_adaptive(f, 1e-10));
  }
}
BENCHMARK(BM_AdaptiveLogCot);

void BM_DeArcsec(benchmark::State& state) {
  Fn1D f;
  f.a = 0.0;
  f.b = 1.0;
  f.singular_a = true;
  f.singular_b = true;
  f.eval = [](double z) {
    double s2 = 1.0 - z * z;
    double v = std::log((1.0 + std::sqrt(s2)) / z);
    return v * v / s2;
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::integrate_de(f, 1e-10));
  }
}
BENCHMARK(BM_DeArcsec);

void BM_Polylog2UnitCircle(benchmark::State& state) {
  std::complex<double> z = std::polar(1.0, 1.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::polylog(2, z));
  }
}
BENCHMARK(BM_Polylog2UnitCircle);

void BM_StieltjesKernel3(benchmark::State& state) {
  Fn1D fhat;
  fhat.a = 0.0;
  fhat.b = 1.0;
  fhat.eval = [](double z) { return std::abs(z) < 1e-8 ? 1.0 - 0.5 * z : std::log1p(z) / z; };
  double nodes[3] = {0.21, 0.22, 0.85};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::stieltjes_kernel(fhat, nodes));
  }
}
BENCHMARK(BM_StieltjesKernel3);

void BM_Eq11Kernel(benchmark::State& state) {
  Fn1D F;
  F.a = -1.0;
  F.b = 1.0;
  F.eval = [](double u) { return 0.5 * std::log1p(u); };
  F.derivative = [](double u) { return 0.5 / (1.0 + u); };
  Fn1D H;
  H.a = 0.0;
  H.b = specfun::kPi / 2.0;
  H.eval = [](double t) { return std::cos(t); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        multiquad::symmetric_double_integral(F, H, 0.0, specfun::kPi / 2.0, 1e-6));
  }
}
BENCHMARK(BM_Eq11Kernel);

void BM_MzvTail(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(series::mzv_tail_triple(10000, 1e-8));
  }
}
BENCHMARK(BM_MzvTail);

}  // namespace

BENCHMARK_MAIN();
