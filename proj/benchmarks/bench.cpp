#include <benchmark/benchmark.h>

#include "affgrass/bijections.hpp"
#include "affgrass/charges.hpp"
#include "affgrass/grassmannian.hpp"
#include "affgrass/littlewood.hpp"
#include "affgrass/qseries.hpp"

using namespace affgrass;

static void BM_LittlewoodAllPartitions(benchmark::State& state) {
  const auto parts = partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(decompose(p, 5));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size()));
}
BENCHMARK(BM_LittlewoodAllPartitions)->Arg(12)->Arg(18)->Arg(24);

static void BM_ChargeRoundtrip(benchmark::State& state) {
  const Partition c{10, 6, 6, 4, 3, 3, 1, 1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(phi_inv(phi(c, 6)));
}
BENCHMARK(BM_ChargeRoundtrip);

// registry is cached, so this measures the BFS alone
static void BM_Orbit(benchmark::State& state) {
  const AffineType t = make_type(Kind::C1, static_cast<int>(state.range(0)));
  registry(t);
  for (auto _ : state) benchmark::DoNotOptimize(orbit(t, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_Orbit)->Args({2, 20})->Args({3, 20})->Args({4, 20});

static void BM_BijectionB3(benchmark::State& state) {
  const AffineType t = make_type(Kind::B1, 3);
  const auto orb = orbit(t, 20);
  for (auto _ : state)
    for (const auto& e : orb) benchmark::DoNotOptimize(distinct_to_core(t, core_to_distinct(t, e.core).lambda_bar));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(orb.size()));
}
BENCHMARK(BM_BijectionB3);

static void BM_LatticeElement(benchmark::State& state) {
  const AffineType t = make_type(Kind::A2odd, 3);
  const auto orb = orbit(t, 20);
  for (auto _ : state)
    for (const auto& e : orb) benchmark::DoNotOptimize(lattice_element(t, e.core));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(orb.size()));
}
BENCHMARK(BM_LatticeElement);

static void BM_NekrasovOkounkov(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nekrasov_okounkov_check(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NekrasovOkounkov)->Arg(10)->Arg(14);

static void BM_Hande(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hande_check(4, 12));
}
BENCHMARK(BM_Hande)->Unit(benchmark::kMillisecond);

static void BM_DeltaCheck(benchmark::State& state) {
  const AffineType t = make_type(Kind::C1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(delta_check(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DeltaCheck)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Macdonald(benchmark::State& state) {
  const AffineType t = make_type(Kind::A1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(macdonald_check(t, 30));
}
BENCHMARK(BM_Macdonald)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
