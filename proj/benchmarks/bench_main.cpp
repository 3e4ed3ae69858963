#include <benchmark/benchmark.h>

#include "flatdef/obstruction.hpp"
#include "flatdef/presentation.hpp"
#include "flatdef/structure.hpp"

using namespace flatdef;

namespace {

Presentation acon() {
  Presentation p;
  p.generators = {"x", "y"};
  for (const char* r : {"y^6 - x^3 - y^2*x", "y^4*x + x^2 + y^2", "x^4 - y^4", "y*x^2 + y^3", "x*y + y*x"})
    p.relations.push_back(parse_ncpoly(r, p.generators));
  p.expected_dim = 12;
  return p;
}

}  // namespace

static void BM_IdentitySpanMatrix(benchmark::State& state) {
  StructureAlgebra m3 = matrix_algebra(3);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(identity_span(m3, m).dim());
}
BENCHMARK(BM_IdentitySpanMatrix)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_BlockProfile(benchmark::State& state) {
  StructureAlgebra a = block_model(BlockProfile::parse("1^1 2^1 3^1"));
  for (auto _ : state) benchmark::DoNotOptimize(block_profile(a).profile.dimension());
}
BENCHMARK(BM_BlockProfile)->Unit(benchmark::kMillisecond);

static void BM_BuildAcon(benchmark::State& state) {
  Presentation p = acon();
  for (auto _ : state) benchmark::DoNotOptimize(build(p).algebra.dim());
}
BENCHMARK(BM_BuildAcon)->Unit(benchmark::kMillisecond);

static void BM_AconTargets(benchmark::State& state) {
  BuildResult b = build(acon());
  Element x = b.reducer.evaluate_word(Word::letter(0));
  Element y = b.reducer.evaluate_word(Word::letter(1));
  for (auto _ : state) benchmark::DoNotOptimize(admissible_targets(b.algebra, x, y).targets.size());
}
BENCHMARK(BM_AconTargets)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
