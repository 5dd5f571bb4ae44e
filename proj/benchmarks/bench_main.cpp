#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hvec/construct.hpp"
#include "hvec/exact.hpp"
#include "hvec/invsys.hpp"
#include "hvec/seqcore.hpp"

namespace {

void BM_MacaulayBound(benchmark::State& state) {
  const long i = state.range(0);
  long n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hvec::macaulay_bound(n, i));
    n = n % 10000 + 1;
  }
}
BENCHMARK(BM_MacaulayBound)->Arg(2)->Arg(5)->Arg(10);

void BM_ConstructThmR(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hvec::construct_thm_r_gorenstein(state.range(0), hvec::Parity::Odd));
  }
}
BENCHMARK(BM_ConstructThmR)->Arg(10)->Arg(16);

void BM_RankModP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> data(n * n);
  for (auto& v : data) v = rng() % 32003;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hvec::rank_mod_p(data, n, n, 32003));
  }
}
BENCHMARK(BM_RankModP)->Arg(66)->Arg(132)->Arg(231);

void BM_RankRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::vector<mpz_class> data(n * n);
  for (auto& v : data) v = static_cast<long>(rng() % (1u << 20));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hvec::rank_integer(data, n, n));
  }
}
BENCHMARK(BM_RankRational)->Arg(16)->Arg(32);

void BM_HilbertThmR(benchmark::State& state) {
  const hvec::FieldSpec field(32003);
  const auto parity = state.range(0) ? hvec::Parity::Odd : hvec::Parity::Even;
  const auto forms = hvec::build_thm34_forms(10, parity, field, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hvec::hilbert_function({forms.f1, forms.f2}));
  }
}
BENCHMARK(BM_HilbertThmR)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyThmE(benchmark::State& state) {
  const hvec::FieldSpec field(32003);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hvec::verify_construction(
        hvec::FamilyKind::ThmE, state.range(0), field, 1, 5));
  }
}
BENCHMARK(BM_VerifyThmE)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
