#pragma once

#include <cstddef>
#include <functional>

namespace hdx {

/// Worker count: the HDX_THREADS environment variable when set, otherwise the
/// hardware concurrency (at least 1).
int worker_count();

/// Runs fn(i) for i in [0, n) across workers. Callers store results by index,
/// so reductions stay deterministic regardless of scheduling.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hdx
