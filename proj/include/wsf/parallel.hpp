#pragma once

#include <cstdint>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wsf {

enum class Execution { serial, parallel };

/// Worker count from WSF_LAB_WORKERS, else the OpenMP default.
int default_worker_count();

/// Runs draw(worker, i) for i in [0, count) and returns the results in index
/// order. Each thread builds its own worker with make_worker(). Sample i must
/// depend only on i (its RNG stream), never on the thread, so serial and
/// parallel runs agree exactly.
template <class Result, class MakeWorker, class Draw>
std::vector<Result> run_samples(std::int64_t count, Execution mode, int workers,
                                MakeWorker make_worker, Draw draw) {
  std::vector<Result> out(static_cast<std::size_t>(count));
  if (mode == Execution::serial || workers <= 1) {
    auto worker = make_worker();
    for (std::int64_t i = 0; i < count; ++i) out[i] = draw(worker, i);
    return out;
  }
  std::exception_ptr failure;
#pragma omp parallel num_threads(workers)
  {
    bool ok = true;
    decltype(make_worker()) worker = [&]() -> decltype(make_worker()) {
      return make_worker();
    }();
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      if (!ok) continue;
      try {
        out[i] = draw(worker, i);
      } catch (...) {
        ok = false;
#pragma omp critical(wsf_run_samples)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace wsf
