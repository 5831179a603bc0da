#include <benchmark/benchmark.h>

#include "a2/cocycle.hpp"
#include "a2/hochschild.hpp"

using namespace a2;

namespace {

DeformationParams generic_lambda() { return {Rational(2, 3), Rational(-5, 7), Rational(11, 2), 0, 0}; }
DeformationParams atypical_lambda() { return {Rational(2, 3), Rational(-5, 7), Rational(11, 2), 3, Rational(-1, 4)}; }

std::array<Cyclotomic, 8> alpha_coefficients() {
  std::array<Cyclotomic, 8> c;
  for (std::size_t i = 0; i < 8; ++i) c[i] = Cyclotomic(Rational(static_cast<long>(i) + 1, 3));
  return c;
}

}  // namespace

static void BM_SigmaTableGeneric(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto L = Lifting::make(N, 1, 2, Case::Generic, generic_lambda());
    benchmark::DoNotOptimize(sigma_table(*L));
  }
}
BENCHMARK(BM_SigmaTableGeneric)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SigmaTableAtypical(benchmark::State& state) {
  for (auto _ : state) {
    auto L = Lifting::make(3, 1, 1, Case::Atypical, atypical_lambda());
    benchmark::DoNotOptimize(sigma_table(*L));
  }
}
BENCHMARK(BM_SigmaTableAtypical)->Unit(benchmark::kMillisecond);

static void BM_Reconstruction(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto L = Lifting::make(N, 1, 1, Case::Generic, generic_lambda());
  auto gamma = build_section(*L);
  auto sigma = sigma_table(*L, gamma);
  for (auto _ : state) benchmark::DoNotOptimize(verify_reconstruction(*L, gamma, sigma));
}
BENCHMARK(BM_Reconstruction)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Orbit(benchmark::State& state) {
  auto L = Lifting::make(3, 1, 1, Case::Atypical, atypical_lambda());
  auto sigma = sigma_table(*L);
  auto alpha = alpha_from_params(*L, alpha_coefficients());
  for (auto _ : state) benchmark::DoNotOptimize(orbit_act(*L, alpha, sigma));
}
BENCHMARK(BM_Orbit)->Unit(benchmark::kMillisecond);

static void BM_Exponential(benchmark::State& state) {
  auto L = Lifting::make(3, 1, 1, Case::Atypical, {});
  HochschildCocycle h;
  for (std::size_t i = 0; i < 5; ++i) h.e[i] = Cyclotomic(Rational(static_cast<long>(i) + 1, 2));
  h.beta = alpha_coefficients();
  auto eta = to_bifunctional(*L, h);
  for (auto _ : state) benchmark::DoNotOptimize(exponential(*L, eta));
}
BENCHMARK(BM_Exponential)->Unit(benchmark::kMillisecond);

static void BM_ClassifyCaseB(benchmark::State& state) {
  Braiding br(3, 1, 1);
  const Cyclotomic& q = br.q();
  Cyclotomic three(3);
  DeformationParams l{Rational(1, 3), Rational(1, 3), (q * q - q) / three, 1, 1};
  for (auto _ : state) {
    auto L = Lifting::make(3, 1, 1, Case::Atypical, l);
    benchmark::DoNotOptimize(classify_purity(*L));
  }
}
BENCHMARK(BM_ClassifyCaseB)->Unit(benchmark::kMillisecond);
