#include <benchmark/benchmark.h>

#include "wsf/experiments.hpp"
#include "wsf/lattice.hpp"
#include "wsf/parallel.hpp"
#include "wsf/past.hpp"
#include "wsf/sampling.hpp"
#include "wsf/wilson.hpp"

namespace {

using namespace wsf;

void run_batch(benchmark::State& state, Execution mode) {
  const int radius = static_cast<int>(state.range(0));
  const int workers = mode == Execution::serial ? 1 : default_worker_count();
  const Network box = build_lattice_box({3, radius, BoundaryMode::wired});
  const VertexId origin = lattice_origin(3, radius);
  const VertexId root = *box.wired_vertex();
  struct Worker {
    WilsonSampler wilson;
    PastFinder past;
    std::vector<EdgeId> parents;
  };
  constexpr int kBatch = 16;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto sizes = run_samples<std::size_t>(
        kBatch, mode, workers, [&] { return Worker{WilsonSampler(box), PastFinder(box), {}}; },
        [&](Worker& w, std::int64_t i) {
          RngStream rng(seed, static_cast<std::uint64_t>(i));
          w.wilson.sample(root, rng, w.parents);
          return w.past.past_of(w.parents, origin).vertices.size();
        });
    benchmark::DoNotOptimize(sizes.data());
    ++seed;
  }
  state.SetItemsProcessed(state.iterations() * kBatch);
  state.counters["workers"] = workers;
}

void BM_TailBatchSerial(benchmark::State& state) { run_batch(state, Execution::serial); }
void BM_TailBatchParallel(benchmark::State& state) { run_batch(state, Execution::parallel); }

void BM_RootWiredSample(benchmark::State& state) {
  const int radius = static_cast<int>(state.range(0));
  const std::vector<int> o(3, 0);
  RootWiredSampler sampler(3, radius, o);
  std::uint64_t i = 0;
  for (auto _ : state) {
    RngStream rng(7, i++);
    benchmark::DoNotOptimize(sampler.sample(rng).max_sup_norm);
  }
}

}  // namespace

BENCHMARK(BM_TailBatchSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TailBatchParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootWiredSample)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
