#include "glorbit/jordan.hpp"
#include "glorbit/lie.hpp"
#include "glorbit/orbit.hpp"
#include "glorbit/sampling.hpp"
#include "glorbit/weyl.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace glorbit;

std::vector<RatMatrix> inputs(std::size_t n, bool structured) {
  SplitMix64 rng(n);
  std::vector<RatMatrix> out;
  for (int i = 0; i < 16; ++i) out.push_back(structured ? random_structured_matrix(rng, n) : random_matrix(rng, n, 10));
  return out;
}

void BM_CharPoly(benchmark::State& state) {
  const auto xs = inputs(static_cast<std::size_t>(state.range(0)), false);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(xs[i++ % xs.size()]));
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 8, 2);

void BM_Chevalley(benchmark::State& state) {
  const auto xs = inputs(static_cast<std::size_t>(state.range(0)), true);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(chevalley(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Chevalley)->DenseRange(2, 6, 1);

void BM_Centralizer(benchmark::State& state) {
  const auto xs = inputs(static_cast<std::size_t>(state.range(0)), true);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(centralizer(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Centralizer)->DenseRange(2, 5, 1);

void BM_StratumSignature(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto xs = inputs(n, true);
  const RatVector v0 = RatVector::unit(n, n - 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(stratum_signature(xs[i++ % xs.size()], v0));
}
BENCHMARK(BM_StratumSignature)->DenseRange(2, 5, 1);

void BM_WeylMul(benchmark::State& state) {
  const auto& names = sl2_names();
  const WeylOperator cas = parse_weyl("Dx^2 + 4*Dy*Dz - 7", names);
  WeylOperator p = tau_sl2(Sl2Element::Y);
  for (long k = 1; k < state.range(0); ++k) p = p * tau_sl2(Sl2Element::X);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_mul(cas, p));
}
BENCHMARK(BM_WeylMul)->DenseRange(1, 5, 2);

}  // namespace

BENCHMARK_MAIN();
