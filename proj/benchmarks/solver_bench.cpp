#include <benchmark/benchmark.h>

#include <string>

#include "tracefree/cover.hpp"
#include "tracefree/groebner.hpp"
#include "tracefree/relations.hpp"
#include "tracefree/slice.hpp"

namespace {

const char* const kKnots[] = {"3_1", "4_1", "5_2", "6_1", "7_4", "8_5"};

tracefree::Diagram knot(std::int64_t index) {
  return tracefree::load_diagram_file(std::string(TRACEFREE_DATA_DIR) + "/census/" + kKnots[index] + ".txt");
}

void BM_GrevlexBasis(benchmark::State& state) {
  tracefree::Ideal f2 = tracefree::gen_f2(knot(state.range(0)));
  auto order = tracefree::MonomialOrder::grevlex({f2.ring.begin(), f2.ring.end()});
  for (auto _ : state) benchmark::DoNotOptimize(tracefree::buchberger(f2.generators, order));
  state.SetLabel(kKnots[state.range(0)]);
}
BENCHMARK(BM_GrevlexBasis)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_SolveF2(benchmark::State& state) {
  tracefree::Diagram d = knot(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tracefree::compute_f2(d));
  state.SetLabel(kKnots[state.range(0)]);
}
BENCHMARK(BM_SolveF2)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Slice(benchmark::State& state) {
  tracefree::Diagram d = knot(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tracefree::compute_s0(d));
  state.SetLabel(kKnots[state.range(0)]);
}
BENCHMARK(BM_Slice)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CoverHomology(benchmark::State& state) {
  tracefree::Diagram d = knot(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tracefree::abelianization(tracefree::fox_presentation(d)));
  state.SetLabel(kKnots[state.range(0)]);
}
BENCHMARK(BM_CoverHomology)->DenseRange(0, 5);

}  // namespace

BENCHMARK_MAIN();
