#include <array>

#include <benchmark/benchmark.h>

#include <polyreal/char_table.hpp>
#include <polyreal/h4.hpp>
#include <polyreal/realization.hpp>
#include <polyreal/stringc.hpp>

using namespace polyreal;

namespace {

void BM_EnumeratePSL(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psl_group(p).order());
}
BENCHMARK(BM_EnumeratePSL)->Arg(11)->Arg(19)->Arg(43)->Unit(benchmark::kMillisecond);

void BM_EnumerateH4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(h4_group().order());
}
BENCHMARK(BM_EnumerateH4)->Unit(benchmark::kMillisecond);

void BM_CharacterTablePSL(benchmark::State& state) {
  const Group g = psl_group(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g).size());
}
BENCHMARK(BM_CharacterTablePSL)->Arg(11)->Arg(19)->Arg(43)->Unit(benchmark::kMillisecond);

void BM_CharacterTableH4(benchmark::State& state) {
  const Group g = h4_group();
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g).size());
}
BENCHMARK(BM_CharacterTableH4)->Unit(benchmark::kMillisecond);

void BM_ConeReport600(benchmark::State& state) {
  const H4Model m = h4_model();
  const std::array<Index, 3> gens{m.reflections[0], m.reflections[1], m.reflections[2]};
  const Subgroup h = subgroup_generated(*m.group, gens);
  auto table = std::make_shared<const CharacterTable>(character_table(*m.group));
  for (auto _ : state) {
    const auto a = analyze_gset(GSet::cosets(m.group, h), table);
    benchmark::DoNotOptimize(cone_report(a).layer_count);
  }
}
BENCHMARK(BM_ConeReport600)->Unit(benchmark::kMillisecond);

void BM_StringC(benchmark::State& state) {
  const Group g = psl_group(19);
  const auto gens = lemma_generators(g, {19, 2, 8, -7});
  for (auto _ : state) benchmark::DoNotOptimize(verify_string_cgroup(g, gens).passes());
}
BENCHMARK(BM_StringC)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
