#include <benchmark/benchmark.h>

#include <random>

#include "diracsieve/sieve.hpp"

using namespace ds;

namespace {

const WeylGroup& e6_group() {
  static WeylGroup wg = WeylGroup::enumerate(RootDatum(TypeLabel::parse("E6")));
  return wg;
}

void BM_WeylEnumerateD5(benchmark::State& state) {
  RootDatum rd(TypeLabel::parse("D5"));
  for (auto _ : state) {
    WeylGroup wg = WeylGroup::enumerate(rd);
    benchmark::DoNotOptimize(wg.size());
  }
}
BENCHMARK(BM_WeylEnumerateD5);

void BM_WeylEnumerateE6(benchmark::State& state) {
  RootDatum rd(TypeLabel::parse("E6"));
  for (auto _ : state) {
    WeylGroup wg = WeylGroup::enumerate(rd);
    benchmark::DoNotOptimize(wg.size());
  }
}
BENCHMARK(BM_WeylEnumerateE6)->Unit(benchmark::kMillisecond);

void BM_DominantProjection(benchmark::State& state) {
  const RootDatum& rd = e6_group().datum();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> u(-40, 40);
  std::vector<ICoords> batch(1024);
  for (auto& v : batch)
    for (int i = 0; i < rd.rank(); ++i) v[i] = u(rng);
  for (auto _ : state) {
    for (ICoords v : batch) {
      rd.project_dominant_inplace(v);
      benchmark::DoNotOptimize(v);
    }
  }
  state.SetItemsProcessed(state.iterations() * batch.size());
}
BENCHMARK(BM_DominantProjection);

void BM_PencilMin(benchmark::State& state) {
  const RootDatum& rd = e6_group().datum();
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> u(0, 4);
  std::vector<ICoords> batch(256);
  for (auto& v : batch)
    for (int i = 0; i < rd.rank(); ++i) v[i] = u(rng);
  for (auto _ : state) {
    for (const ICoords& v : batch)
      benchmark::DoNotOptimize(detail::pencil_min_scaled(v, rd));
  }
  state.SetItemsProcessed(state.iterations() * batch.size());
}
BENCHMARK(BM_PencilMin);

void BM_FamilySieve1145(benchmark::State& state) {
  const WeylGroup& wg = e6_group();
  Involution s = wg.involution_from_rho_image(parse_weight("[-1,-1,-10,8,-1,-1]"));
  for (auto _ : state) {
    FamilyReport rep = run_family(s, wg);
    benchmark::DoNotOptimize(rep.step1_count);
  }
}
BENCHMARK(BM_FamilySieve1145)->Unit(benchmark::kMillisecond);

void BM_FamilySieve124048(benchmark::State& state) {
  const WeylGroup& wg = e6_group();
  Involution s = wg.involution_from_rho_image(parse_weight("[-2,5,6,-7,6,-2]"));
  for (auto _ : state) {
    FamilyReport rep = run_family(s, wg);
    benchmark::DoNotOptimize(rep.step1_count);
  }
}
BENCHMARK(BM_FamilySieve124048)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
