#include <benchmark/benchmark.h>

#include <span>

#include "lvmforge/analysis.hpp"
#include "lvmforge/equipment.hpp"
#include "lvmforge/export.hpp"
#include "lvmforge/ingest.hpp"
#include "lvmforge/lvm.hpp"

using namespace lvmforge;

namespace {

lvm::LvmDocument make_document(std::size_t rows) {
  std::vector<analysis::StepResponse> channels;
  for (std::uint64_t c = 0; c < 3; ++c)
    channels.push_back(analysis::synth_first_order(100, 20, 15, 0.5, rows, 0.05, c));
  return analysis::gen_lvm(channels, {"bench", {2020, 1, 1}, {}});
}

void BM_Serialize(benchmark::State& state) {
  const auto doc = make_document(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lvm::serialize_lvm(doc));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Serialize)->Arg(100)->Arg(10000);

void BM_Parse(benchmark::State& state) {
  const auto text = lvm::serialize_lvm(make_document(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(lvm::parse_lvm(text));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Parse)->Arg(100)->Arg(10000);

void BM_SteadyState(benchmark::State& state) {
  const auto r = analysis::synth_first_order(100, 20, 1000, 1, static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(analysis::detect_steady_state(std::span<const lvm::SeriesPoint>(r.samples), 50, 0.2));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SteadyState)->Arg(1000)->Arg(100000);

void BM_TimeConstant(benchmark::State& state) {
  const auto r = analysis::synth_first_order(100, 20, 15, 0.01, static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(analysis::estimate_time_constant(r));
}
BENCHMARK(BM_TimeConstant)->Arg(10000);

void BM_Export(benchmark::State& state) {
  const auto m = model::builtin_sytherm(3);
  const auto rec = ingest::map_lvm_to_record(make_document(static_cast<std::size_t>(state.range(0))), m);
  const auto fmt = static_cast<exporter::ExportFormat>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(exporter::export_record(fmt, rec, m));
}
BENCHMARK(BM_Export)->Args({1000, 0})->Args({1000, 1});

}  // namespace

BENCHMARK_MAIN();
