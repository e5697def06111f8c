#pragma once

#include <cstddef>
#include <functional>

namespace ltk {

/// Worker count: hardware concurrency, capped by the LTK_THREADS environment variable.
std::size_t worker_count();

/// Calls body(i) for i in [0, n), spread over worker_count() threads.
/// body must be safe to call concurrently for distinct i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace ltk
