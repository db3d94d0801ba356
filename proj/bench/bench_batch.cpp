#include <benchmark/benchmark.h>

#include "iip/batch.hpp"
#include "iip/generator.hpp"

namespace {

std::vector<iip::Instance> make_batch(std::size_t count) {
  iip::GenConfig cfg;
  cfg.seed = 11;
  cfg.force_invariance = true;
  iip::InstanceGenerator gen(cfg);
  std::vector<iip::Instance> batch;
  batch.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    batch.push_back(gen.next());
  }
  return batch;
}

void BM_VerifySerial(benchmark::State& state) {
  const auto batch = make_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iip::verify_batch_serial(batch));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto batch = make_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iip::verify_batch(batch));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = iip::batch_threads();
}

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_batch(static_cast<std::size_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Generate)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
