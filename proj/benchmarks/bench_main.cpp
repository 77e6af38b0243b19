#include "fgaut/mk_product.hpp"
#include "fgaut/splittings.hpp"

#include <benchmark/benchmark.h>

using namespace fgaut;

static void BM_WordMultiply(benchmark::State& state) {
  const Basis b = Basis::standard(3);
  const auto len = static_cast<int>(state.range(0));
  const Word u = power(parse_word(b, "a1 x1 a2^-1"), len);
  const Word v = power(parse_word(b, "a2 x1^-1 a1^-1"), len / 2) * power(parse_word(b, "a1 a2"), len);
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_WordMultiply)->Arg(4)->Arg(64)->Arg(1024);

static void BM_AutomorphismCompose(benchmark::State& state) {
  const Basis b = Basis::standard(static_cast<std::size_t>(state.range(0)));
  const Automorphism f = generators::nielsen_tau(b) * generators::left_transvection(b, 1, parse_word(b, "a1 a2"));
  const Automorphism g = inner(parse_word(b, "x1 a2")) * generators::petal_inversion(b, 1);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_AutomorphismCompose)->Arg(3)->Arg(5)->Arg(8);

static void BM_MkMultiply(benchmark::State& state) {
  const Basis a = Basis::standard(2);
  const auto k = static_cast<std::size_t>(state.range(0));
  const Automorphism tau = generators::nielsen_tau(a);
  std::vector<Word> cx(k, parse_word(a, "a1 a2 a1^-1")), cy(k, parse_word(a, "a2^-1 a1"));
  const MkElement x(cx, tau), y(cy, inner(parse_word(a, "a1")));
  for (auto _ : state) benchmark::DoNotOptimize(mk_mul(x, y));
}
BENCHMARK(BM_MkMultiply)->Arg(1)->Arg(3)->Arg(8);

static void BM_BuildBall(benchmark::State& state) {
  const auto s = RoseSplitting::standard(4, 2);
  const auto radius = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_ball(s, radius));
}
BENCHMARK(BM_BuildBall)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
