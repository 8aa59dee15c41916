// Benchmarks for the enumeration core: root system closure, coset
// representative search, Bruhat comparison, and the two full-admissible
// enumeration strategies.

#include <benchmark/benchmark.h>

#include "borbits/order_dim.hpp"

using namespace borbits;

namespace {

CominusculeData make_cd(const RootSystem& rs, int alpha_index) {
  return build_cominuscule_data(rs, rs.simples()[alpha_index]);
}

void BM_BuildRootSystem_C8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem::build(Type::C, 8));
}
BENCHMARK(BM_BuildRootSystem_C8);

void BM_BuildRootSystem_E7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem::build(Type::E7, 7));
}
BENCHMARK(BM_BuildRootSystem_E7);

void BM_EnumerateWP_C8(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Type::C, 8);
  CominusculeData cd = make_cd(rs, 7);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_wp(cd));  // 256 elements
}
BENCHMARK(BM_EnumerateWP_C8);

void BM_EnumerateWP_E7(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Type::E7, 7);
  CominusculeData cd = make_cd(rs, 6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_wp(cd));  // 56 elements
}
BENCHMARK(BM_EnumerateWP_E7);

void BM_BruhatLeq_B5(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Type::B, 5);
  WeylElement long_elem = product_of_word(rs, {1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1});
  WeylElement mid = product_of_word(rs, {2, 3, 4, 5, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(bruhat_leq(rs, mid, long_elem));
}
BENCHMARK(BM_BruhatLeq_B5);

void BM_OrthogonalSubsets_D5(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Type::D, 5);
  CominusculeData cd = make_cd(rs, 0);
  WeylElement top = omega_p(cd);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orthogonal_subsets(cd, top));
}
BENCHMARK(BM_OrthogonalSubsets_D5);

void BM_FullAdmissible_Filter_C5(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Type::C, 5);
  CominusculeData cd = make_cd(rs, 4);
  WeylElement top = omega_p(cd);
  for (auto _ : state)
    benchmark::DoNotOptimize(typec_enumerate_full_admissible(cd, top, EnumStrategy::Filter));
}
BENCHMARK(BM_FullAdmissible_Filter_C5);

void BM_FullAdmissible_Incremental_C5(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Type::C, 5);
  CominusculeData cd = make_cd(rs, 4);
  WeylElement top = omega_p(cd);
  for (auto _ : state)
    benchmark::DoNotOptimize(typec_enumerate_full_admissible(cd, top, EnumStrategy::Incremental));
}
BENCHMARK(BM_FullAdmissible_Incremental_C5);

void BM_FullAdmissible_Incremental_C7(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Type::C, 7);
  CominusculeData cd = make_cd(rs, 6);
  WeylElement top = omega_p(cd);
  for (auto _ : state)
    benchmark::DoNotOptimize(typec_enumerate_full_admissible(cd, top, EnumStrategy::Incremental));
}
BENCHMARK(BM_FullAdmissible_Incremental_C7);

void BM_Completion_C6(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Type::C, 6);
  CominusculeData cd = make_cd(rs, 5);
  WeylElement top = omega_p(cd);
  auto rid = [&](int i, int j) {
    Coords c(6, 0);
    c[i - 1] += 1;
    c[j - 1] += 1;
    return rs.root_of(c);
  };
  std::vector<RootId> s{rid(1, 6), rid(2, 5), rid(3, 4), rid(3, 3)};
  std::sort(s.begin(), s.end());
  TypeCSet t = typec_admissible(cd, top, s);
  for (auto _ : state) benchmark::DoNotOptimize(typec_completion(cd, t));
}
BENCHMARK(BM_Completion_C6);

void BM_BuildPoset_A3(benchmark::State& state) {
  RootSystem rs = RootSystem::build(Type::A, 3);
  CominusculeData cd = make_cd(rs, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(cd));
}
BENCHMARK(BM_BuildPoset_A3);

}  // namespace

BENCHMARK_MAIN();
