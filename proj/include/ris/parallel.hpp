#pragma once

#include <cstddef>
#include <functional>

namespace ris {

/// RIS_WORKERS if set to a positive integer, else hardware concurrency (>= 1).
int default_workers();

/// Calls body(i) for every i in [0, count) on up to `workers` threads.
/// Indices are handed out in order from a shared counter; body must write
/// only to slots owned by i.  The first exception thrown is rethrown here
/// after all threads join.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace ris
