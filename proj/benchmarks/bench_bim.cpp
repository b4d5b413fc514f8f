#include <benchmark/benchmark.h>

#include "fcmt/bim.hpp"
#include "fcmt/enrich.hpp"
#include "fcmt/span_bridge.hpp"

namespace {

using namespace fcmt;

void BM_CheckMonadZ3(benchmark::State& state) {
  auto enc =
      cat_to_monad(monoid_category({"g0", "g1", "g2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0));
  for (auto _ : state) {
    LawReport rep = check_monad(*enc.oracle, enc.monad);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_CheckMonadZ3);

void BM_BimOracleTwoCategories(benchmark::State& state) {
  for (auto _ : state) {
    SpanSceneBuilder builder;
    std::uint32_t i = builder.add_category("C", arrow_category());
    std::uint32_t j = builder.add_category("D", arrow_category());
    builder.add_all_object_functions(i, j);
    auto scene = builder.build();
    auto B = bim_oracle(scene.oracle);
    benchmark::DoNotOptimize(B->monads().size());
  }
}
BENCHMARK(BM_BimOracleTwoCategories);

void BM_SubsetEnrichment(benchmark::State& state) {
  FinSet base{"S", {"1", "2", "3", "4", "5", "6"}};
  std::vector<FinSet> family{{"C0", {"1", "2", "3"}},
                             {"C1", {"2", "3", "4"}},
                             {"C2", {"1", "3", "5"}},
                             {"C3", {"4", "5", "6"}}};
  for (auto _ : state) {
    auto sub = parbjn_from_subsets(base, family);
    LawReport rep = check_enriched(*sub.oracle, sub.category);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_SubsetEnrichment);

void BM_EnrichToBim(benchmark::State& state) {
  FinSet base{"S", {"1", "2", "3"}};
  auto sub = parbjn_from_subsets(base, {{"C1", {"1", "2"}}, {"C2", {"2", "3"}}});
  auto B = bim_oracle(sub.oracle);
  for (auto _ : state) {
    EnrichedCategory derived = enrich_to_bim(*B, sub.category);
    LawReport rep = check_enriched(*B, derived);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_EnrichToBim);

}  // namespace
