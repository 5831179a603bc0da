#include <benchmark/benchmark.h>

#include "a2/algebra.hpp"
#include "a2/coproduct.hpp"

using namespace a2;

static void BM_CleftProductsCold(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto br = std::make_shared<const Braiding>(N, 1, 1);
  DeformationParams l{Rational(2, 3), Rational(-5, 7), Rational(11, 2), 0, 0};
  const auto basis = pbw_basis(N);
  for (auto _ : state) {
    Algebra E(br, AlgebraKind::Cleft, l);
    for (const auto& x : basis)
      for (const auto& y : basis) benchmark::DoNotOptimize(E.mul(x, y));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(basis.size() * basis.size()));
}
BENCHMARK(BM_CleftProductsCold)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_RewriteWord(benchmark::State& state) {
  auto br = std::make_shared<const Braiding>(3, 1, 1);
  Algebra E(br, AlgebraKind::Cleft, {1, 2, 3, 4, 5});
  Word w;
  for (int i = 0; i < state.range(0); ++i) w.push_back(i % 2 ? Letter::x2 : Letter::x1);
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_word(E, w));
}
BENCHMARK(BM_RewriteWord)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_DeltaClosed(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Braiding br(N, 1, 2);
  const auto basis = pbw_basis(N);
  for (auto _ : state)
    for (const auto& n : basis) benchmark::DoNotOptimize(delta_closed(br, n));
}
BENCHMARK(BM_DeltaClosed)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
