#pragma once

#include <functional>

namespace cosal {

// Runs fn(0..n-1) across up to jobs worker threads. Work items must be
// independent; the first exception thrown by any item is rethrown after
// all threads join. jobs <= 1 runs inline.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace cosal
