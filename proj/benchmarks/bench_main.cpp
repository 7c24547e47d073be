#include <benchmark/benchmark.h>

#include "sphex/cache.hpp"
#include "sphex/chartab.hpp"
#include "sphex/exclusion.hpp"
#include "sphex/models.hpp"

using namespace sphex;

namespace {

const FiniteGroup& fixture_group() {
  static FiniteGroup g = group_from_file(std::string(SPHEX_DATA_DIR) + "/sl25c2.grp", 10000, "SL(2,5).C2");
  return g;
}

const CharacterTable& fixture_table() {
  static CharacterTable t = CharacterTable::load_file(std::string(SPHEX_DATA_DIR) + "/sl25c2.ctab", fixture_group());
  return t;
}

const SubgroupLattice& fixture_lattice() {
  static SubgroupLattice lat = enumerate_subgroups(fixture_group());
  return lat;
}

const ExclusionEngine& fixture_engine() {
  static ExclusionEngine e(fixture_group(), fixture_table(), fixture_lattice());
  return e;
}

} // namespace

static void BM_CycloMul(benchmark::State& state) {
  CycloNum a = CycloNum::root_of_unity(120, 7) + CycloNum(3) * CycloNum::root_of_unity(120, 31);
  CycloNum b = CycloNum::root_of_unity(120, 49) - CycloNum(2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul);

static void BM_GenerateGroup240(benchmark::State& state) {
  GroupFile gf = read_group_file(std::string(SPHEX_DATA_DIR) + "/sl25c2.grp");
  for (auto _ : state) {
    FiniteGroup g(gf.generators, 10000, "");
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GenerateGroup240);

static void BM_ConjugacyClassesS5(benchmark::State& state) {
  for (auto _ : state) {
    FiniteGroup s5 = models::symmetric(5);
    benchmark::DoNotOptimize(s5.classes().size());
  }
}
BENCHMARK(BM_ConjugacyClassesS5);

static void BM_SubgroupLatticeSL25(benchmark::State& state) {
  FiniteGroup sl = models::sl2(5);
  for (auto _ : state) {
    auto lat = enumerate_subgroups(sl);
    benchmark::DoNotOptimize(lat.classes().size());
  }
}
BENCHMARK(BM_SubgroupLatticeSL25);

static void BM_FpDimMatrix(benchmark::State& state) {
  const auto& t = fixture_table();
  const auto& lat = fixture_lattice();
  for (auto _ : state) {
    long acc = 0;
    for (std::size_t r = 0; r < t.real_irreducibles().size(); ++r)
      for (const auto& c : lat.classes()) acc += t.fp_dim_real(r, c.representative);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FpDimMatrix);

static void BM_EnumerateCandidates32(benchmark::State& state) {
  const auto& e = fixture_engine();
  CandidateConstraints cons;
  cons.effective = true;
  for (auto _ : state) benchmark::DoNotOptimize(e.enumerate_candidates(32, cons).size());
}
BENCHMARK(BM_EnumerateCandidates32);

static void BM_ExcludeDim17Standard(benchmark::State& state) {
  const auto& e = fixture_engine();
  for (auto _ : state) benchmark::DoNotOptimize(e.exclude(17, Mode::One, Scope::Standard, true, std::nullopt));
}
BENCHMARK(BM_ExcludeDim17Standard);

BENCHMARK_MAIN();
