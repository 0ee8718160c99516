#pragma once

#include <functional>

namespace fluxlat {

/// Number of worker threads for grid kernels. Priority: explicit request
/// (CLI flag) > FLUXLAT_THREADS env var > hardware concurrency. Always >= 1.
int resolve_thread_count(int requested = 0);

/// Apply f(i) for i in [0, n). threads <= 1 runs the plain serial loop,
/// otherwise an OpenMP parallel-for with dynamic scheduling. f must write
/// only to its own output slot and must not throw: every point is invoked
/// exactly once either way, so results are identical between the two paths.
void grid_map(int n, int threads, const std::function<void(int)>& f);

}  // namespace fluxlat
