#include <benchmark/benchmark.h>

#include "k3twist/catalog.hpp"
#include "k3twist/free_products.hpp"
#include "k3twist/hurwitz_braid.hpp"
#include "k3twist/reflection_group.hpp"
#include "k3twist/verify.hpp"

using namespace k3twist;

namespace {

const CatalogEntry& p3() { return find_entry(default_catalog(), "P3"); }

void BM_NoRelation(benchmark::State& state) {
  const auto gens = p3().reflections();
  const int length = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(no_relation_up_to_length(gens, {2, 2, 2, 2}, length));
  }
}
BENCHMARK(BM_NoRelation)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_FordDomain(benchmark::State& state) {
  const auto gens = p3().reflections();
  const int length = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ford_domain(gens, {2, 2, 2, 2}, length, p3().strip));
  }
}
BENCHMARK(BM_FordDomain)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_KernelGenerators(benchmark::State& state) {
  const auto& p = find_entry(default_catalog(), "Deg8CI").presentation;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_generators(p.group, p.hom, p.section));
  }
}
BENCHMARK(BM_KernelGenerators);

void BM_HurwitzOrbit(benchmark::State& state) {
  const auto start = free_basis_tuple(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hurwitz_orbit(start, 7, 20000));
  }
}
BENCHMARK(BM_HurwitzOrbit)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& e : default_catalog()) benchmark::DoNotOptimize(verify_entry(e));
  }
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
