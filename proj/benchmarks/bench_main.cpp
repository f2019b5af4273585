#include <benchmark/benchmark.h>

#include "hochq/cohomology.hpp"
#include "hochq/cupprod.hpp"
#include "hochq/oracle.hpp"
#include "support.hpp"

namespace {

using namespace hochq;

void BM_HHTableGeneric(benchmark::State& state) {
  const auto inst = testing::generic_plane();
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hh_dim_table(inst, cap));
}
BENCHMARK(BM_HHTableGeneric)->Arg(8)->Arg(16)->Arg(32);

void BM_HHTableRandomN3(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto inst = testing::random_instance(rng, 3, ScalarGroupSpec{1, 4}, true);
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hh_dim_table(inst, cap));
}
BENCHMARK(BM_HHTableRandomN3)->Arg(4)->Arg(8);

void BM_CenterRootOfUnity(benchmark::State& state) {
  const auto inst = testing::root_plane(3);
  for (auto _ : state) benchmark::DoNotOptimize(center_basis(inst, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CenterRootOfUnity)->Arg(12)->Arg(24);

void BM_CupProducts(benchmark::State& state) {
  const auto inst = testing::root_plane(3);
  std::vector<CohomologyClass> pool;
  for (int m = 0; m <= 2; ++m) {
    for (const auto& c : hh_basis(inst, 0, m, 6)) pool.push_back(c);
  }
  for (auto _ : state) {
    for (const auto& u : pool) {
      for (const auto& v : pool) benchmark::DoNotOptimize(cup(inst, u, v));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pool.size() * pool.size()));
}
BENCHMARK(BM_CupProducts);

void BM_VerifyInstance(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto inst = testing::random_instance(rng, static_cast<int>(state.range(0)), ScalarGroupSpec{1, 3}, true);
  const int cap = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_instance(inst, cap));
}
BENCHMARK(BM_VerifyInstance)->Args({2, 6})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_HomotopyPiece(benchmark::State& state) {
  std::mt19937_64 rng(13);
  const auto inst = testing::random_instance(rng, 3, ScalarGroupSpec{1, 5}, true);
  const auto s = choose_specialization(inst.scalars, required_bound(inst, 5));
  std::vector<Signature> acyclic;
  for (const auto& gamma : enumerate_signatures(3, 5)) {
    if (!in_C_g(inst, 0, gamma)) acyclic.push_back(gamma);
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_homotopy_identity(inst, 0, acyclic[k++ % acyclic.size()], s));
  }
}
BENCHMARK(BM_HomotopyPiece);

}  // namespace

BENCHMARK_MAIN();
