#pragma once

#include <cstddef>
#include <functional>

namespace lieinv {

/// Worker count: LIEINV_THREADS if set to a positive integer, else the hardware concurrency.
unsigned worker_count();

/// Runs f(0), ..., f(n-1) on up to worker_count() threads. Exceptions are rethrown
/// (the one from the lowest index wins). Callers write results into pre-sized slots,
/// so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace lieinv
