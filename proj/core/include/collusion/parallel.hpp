#pragma once

#include <cstddef>
#include <functional>

namespace collusion {

/// Worker cap: COLLUSION_KIT_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Work is distributed dynamically over at most
/// worker_count() threads; the first exception thrown by any body is
/// rethrown on the calling thread once all workers stop. Callers that need
/// determinism must make body(i) depend only on i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace collusion
