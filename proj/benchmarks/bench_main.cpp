#include <benchmark/benchmark.h>

#include "genbell/dobinski.hpp"
#include "genbell/generating_functions.hpp"
#include "genbell/measures.hpp"
#include "genbell/moment_analysis.hpp"
#include "genbell/normal_order.hpp"

namespace {

using namespace genbell;

void BM_StirlingTable(benchmark::State& state) {
  const FamilyParams p(3, 2);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normal_order::stirling_table(p, n));
}
BENCHMARK(BM_StirlingTable)->Arg(8)->Arg(32)->Arg(128);

void BM_FockOracle(benchmark::State& state) {
  const FamilyParams p(3, 2);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normal_order::fock_oracle(p, n, 5 * n + 1));
}
BENCHMARK(BM_FockOracle)->Arg(2)->Arg(4);

void BM_DobinskiInteger(benchmark::State& state) {
  const PrecisionContext ctx;
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dobinski::dobinski_integer(FamilyParams(9, 6), n, ctx));
}
BENCHMARK(BM_DobinskiInteger)->Arg(1)->Arg(4)->Arg(8);

void BM_BesselK(benchmark::State& state) {
  const PrecisionContext ctx;
  PrecisionScope scope(ctx.precision_bits);
  const Real x(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(measures::bessel_k(Real(1) / Real(3), x, ctx));
}
BENCHMARK(BM_BesselK)->Arg(1)->Arg(20)->Arg(100);

void BM_MomentQuadrature(benchmark::State& state) {
  const PrecisionContext ctx;
  const auto spec = measures::WeightSpec::for_family(
      state.range(0) == 0 ? FamilyParams(2, 1) : state.range(0) == 1 ? FamilyParams(3, 1) : FamilyParams(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(measures::moment_quadrature_batch(spec, 4, ctx));
}
BENCHMARK(BM_MomentQuadrature)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Hankel(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  const auto seq = normal_order::bell_sequence(FamilyParams(4, 2), 2 * order);
  for (auto _ : state) benchmark::DoNotOptimize(moment_analysis::hankel_determinants(seq, order));
}
BENCHMARK(BM_Hankel)->Arg(4)->Arg(8)->Arg(16);

void BM_EgfCoefficients(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generating_functions::egf_coefficients(3, order));
}
BENCHMARK(BM_EgfCoefficients)->Arg(15)->Arg(60);

void BM_Asymptotic(benchmark::State& state) {
  const PrecisionContext ctx;
  for (auto _ : state) benchmark::DoNotOptimize(moment_analysis::asymptotic_b21(400, ctx));
}
BENCHMARK(BM_Asymptotic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
