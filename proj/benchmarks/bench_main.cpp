#include <benchmark/benchmark.h>

#include "flagval/arena.hpp"
#include "flagval/factor.hpp"
#include "flagval/flag.hpp"
#include "flagval/lattice.hpp"
#include "flagval/milnor.hpp"
#include "flagval/reconstruct.hpp"
#include "flagval/rng.hpp"

using namespace flagval;

static void BM_IsFlagMap(benchmark::State& state) {
  const ProjectiveSpace space(2, Field::get(static_cast<std::uint32_t>(state.range(0))));
  std::vector<std::vector<int>> maps;
  for (std::uint64_t i = 0; i < 64; ++i) {
    auto rng = item_rng(1, i);
    std::vector<int> labels(space.size());
    for (auto& l : labels) l = static_cast<int>(uniform_below(rng, 3));
    maps.push_back(std::move(labels));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_flag_map(space, maps[i++ % maps.size()]));
}
BENCHMARK(BM_IsFlagMap)->Arg(2)->Arg(3)->Arg(5);

static void BM_Factor(benchmark::State& state) {
  const FunctionField k = FunctionField::parse("F3(t)");
  const Poly p = k.poly("t^12+t^7+2*t^3+t+1");
  for (auto _ : state) benchmark::DoNotOptimize(poly_factor(p));
}
BENCHMARK(BM_Factor);

static void BM_TameResidues(benchmark::State& state) {
  const FunctionField k = FunctionField::parse("F5(t)");
  const K2Symbol s = K2Symbol::of(k.element("(t^3+2*t+1)/(t^2+3)"), k.element("t^4+t+4"));
  for (auto _ : state) benchmark::DoNotOptimize(tame_residues(s));
}
BENCHMARK(BM_TameResidues);

static void BM_IntegerKernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  lattice::IntMatrix a(n / 2, lattice::IntVector(n, 0));
  auto rng = item_rng(3, 0);
  for (auto& row : a)
    for (int j = 0; j < 4; ++j) row[uniform_below(rng, n)] = static_cast<std::int64_t>(uniform_below(rng, 7)) - 3;
  for (auto _ : state) benchmark::DoNotOptimize(lattice::integer_kernel(a, n));
}
BENCHMARK(BM_IntegerKernel)->Arg(20)->Arg(40);

static void BM_ArenaBuild(benchmark::State& state) {
  const FunctionField k = FunctionField::parse("F3(x,y)");
  for (auto _ : state) benchmark::DoNotOptimize(Arena(k, static_cast<int>(state.range(0))).point_count());
}
BENCHMARK(BM_ArenaBuild)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ExtractValuation(benchmark::State& state) {
  const FunctionField k = FunctionField::parse("F3(x,y)");
  const Arena arena(k, 1);
  const PsiMap psi = PsiMap::parse("from-valuation:curve:x", k);
  for (auto _ : state) benchmark::DoNotOptimize(extract_valuation(psi, arena).checks.passed());
}
BENCHMARK(BM_ExtractValuation)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
