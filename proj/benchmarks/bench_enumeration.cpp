#include <benchmark/benchmark.h>

#include "fcmt/law_check.hpp"
#include "fcmt/span_universe.hpp"

namespace {

using namespace fcmt;

SpanUniverse u1_universe() {
  SpanUniverse u;
  u.sets.push_back({"X", {"x1", "x2"}});
  u.sets.push_back({"Y", {"y1", "y2"}});
  u.sets.push_back({"Z", {"z1"}});
  SpanData A;
  A.name = "A";
  A.src = 0;
  A.dst = 1;
  A.apex = {"a1", "a2", "a3"};
  A.leg_l = {0, 0, 1};
  A.leg_r = {0, 1, 1};
  u.spans.push_back(A);
  SpanData B;
  B.name = "B";
  B.src = 1;
  B.dst = 2;
  B.apex = {"b1", "b2"};
  B.leg_l = {1, 1};
  B.leg_r = {0, 0};
  u.spans.push_back(B);
  u.functions.push_back({"swapX", 0, 0, {1, 0}});
  return u;
}

/// A chain of n spans between 2-element sets, for limit scaling.
SpanUniverse chain_universe(int n) {
  SpanUniverse u;
  for (int i = 0; i <= n; ++i) {
    std::string name = "S" + std::to_string(i);
    u.sets.push_back({name, {name + "a", name + "b"}});
  }
  for (int i = 0; i < n; ++i) {
    SpanData sp;
    sp.name = "M" + std::to_string(i);
    sp.src = static_cast<std::uint32_t>(i);
    sp.dst = static_cast<std::uint32_t>(i + 1);
    sp.apex = {"p", "q"};
    sp.leg_l = {0, 1};
    sp.leg_r = {1, 0};
    u.spans.push_back(sp);
  }
  return u;
}

void BM_PathLimitChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SpanUniverse u = chain_universe(n);
  std::vector<std::uint32_t> path;
  for (int i = 0; i < n; ++i) path.push_back(static_cast<std::uint32_t>(i));
  for (auto _ : state) {
    PathLimit L = compute_path_limit(u, path, 0);
    benchmark::DoNotOptimize(L.tuples.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_PathLimitChain)->DenseRange(1, 8)->Complexity();

void BM_SpanCells(benchmark::State& state) {
  SpanUniverse u = u1_universe();
  auto V = span_fc(u);
  HorId A = *V->horizontal_named("A");
  Frame f;
  f.source = Path::of({A});
  f.left = V->id_vert(A.src);
  f.right = V->id_vert(A.dst);
  f.target = A;
  for (auto _ : state) {
    auto cs = V->cells(f);
    benchmark::DoNotOptimize(cs.data());
  }
}
BENCHMARK(BM_SpanCells);

void BM_LawCheckU1(benchmark::State& state) {
  auto V = span_fc(u1_universe());
  CheckBounds bounds{static_cast<std::uint32_t>(state.range(0)), 2, 10000, false};
  for (auto _ : state) {
    LawReport rep = check_fc_laws(*V, bounds);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_LawCheckU1)->Arg(2)->Arg(3);

void BM_LawCheckU1Parallel(benchmark::State& state) {
  auto V = span_fc(u1_universe());
  CheckBounds bounds{3, 2, 10000, true};
  for (auto _ : state) {
    LawReport rep = check_fc_laws(*V, bounds);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_LawCheckU1Parallel);

}  // namespace

BENCHMARK_MAIN();
