#pragma once

#include <functional>

namespace gft {

// Worker count: hardware concurrency capped by the GFT_THREADS environment
// variable (values < 1 mean serial).
int thread_budget();

// Runs body(0..n-1) on up to thread_budget() workers.  Each index must only
// write to its own slot so results are identical to the serial order.
void parallel_for(int n, const std::function<void(int)>& body);

} // namespace gft
