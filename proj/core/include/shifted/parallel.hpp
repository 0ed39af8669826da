#pragma once

#include <cstddef>
#include <functional>

namespace shifted {

/// Worker thread budget. Controlled by the environment variable
/// SHIFTED_BETTI_THREADS; 0 or unset means "use all hardware threads".
unsigned thread_budget();

/// Override the budget for the current process (used by tests).
void set_thread_budget(unsigned threads);

/// Run fn(i) for every i in [0, count). Results must be written to
/// per-index slots so the outcome does not depend on scheduling.
/// Exceptions thrown by fn are re-thrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace shifted
