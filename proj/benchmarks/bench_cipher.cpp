#include <benchmark/benchmark.h>

#include "eelwe/analysis.hpp"
#include "eelwe/cipher.hpp"
#include "eelwe/cost_model.hpp"

namespace {

using namespace eelwe;

MasterKey
bench_key()
{
  return MasterKey::from_hex("0123456789ABCDEF0123");
}

void
BM_Encrypt(benchmark::State& state)
{
  const auto id = all_variants[static_cast<std::size_t>(state.range(0))];
  const BlockCipher cipher(id, bench_key());
  const auto mask = cipher.params().block_mask();
  std::uint64_t x = 0x5742414E4B4C4345ULL & mask;
  for (auto _ : state) {
    x = cipher.encrypt(x);
    benchmark::DoNotOptimize(x);
  }
  state.SetBytesProcessed(state.iterations() * cipher.params().n / 8);
  state.SetLabel(to_string(id));
}
BENCHMARK(BM_Encrypt)->DenseRange(0, 2);

void
BM_Decrypt(benchmark::State& state)
{
  const auto id = all_variants[static_cast<std::size_t>(state.range(0))];
  const BlockCipher cipher(id, bench_key());
  std::uint64_t x = 0x5742414E4B4C4345ULL & cipher.params().block_mask();
  for (auto _ : state) {
    x = cipher.decrypt(x);
    benchmark::DoNotOptimize(x);
  }
  state.SetBytesProcessed(state.iterations() * cipher.params().n / 8);
  state.SetLabel(to_string(id));
}
BENCHMARK(BM_Decrypt)->DenseRange(0, 2);

void
BM_ExpandKey(benchmark::State& state)
{
  const auto key = bench_key();
  for (auto _ : state)
    benchmark::DoNotOptimize(expand_key(key));
}
BENCHMARK(BM_ExpandKey);

void
BM_CostSweep(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(cost::sweep(VariantId::e64));
}
BENCHMARK(BM_CostSweep);

void
BM_Avalanche(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(analysis::avalanche_test(VariantId::e64, 1000, total_rounds, 1));
}
BENCHMARK(BM_Avalanche)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
