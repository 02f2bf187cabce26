#pragma once

#include <functional>

namespace subchain {

/// Worker cap: SUBCHAIN_THREADS if set (>= 1), else hardware threads.
int max_threads();

/// Run body(i) for i in [0, n). Work items must write only their own
/// output slot; assembly is then deterministic regardless of schedule.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace subchain
