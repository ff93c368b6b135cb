#pragma once

#include <cstddef>
#include <functional>

namespace ttc {

/// Environment variable controlling the worker count for per-slice loops.
inline constexpr const char* kThreadsEnvVar = "TTC_NUM_THREADS";

/// Worker count: TTC_NUM_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(0..count-1). Iterations must be independent; each writes only
/// its own output so the result matches sequential order bit for bit. If
/// several iterations throw, the exception of the lowest index is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace ttc
