#pragma once

#include <cstddef>
#include <functional>

namespace hw {

/// Worker count from HW_THREADS (unset or 0 = hardware concurrency).
unsigned worker_count();

/// Runs body(i) for i in [0, count). Each index writes only its own output
/// slot, so results do not depend on the schedule. If any call throws, the
/// exception of the lowest failing index is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hw
