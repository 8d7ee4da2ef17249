// Copyright 2026 The ink authors. Apache 2.0 License.

#pragma once

#include <cstddef>
#include <functional>

namespace ink {

/// Worker count: INK_THREADS if set (>= 1), else hardware concurrency.
std::size_t thread_limit();

/// Runs fn(i) for i in [0, n) on up to thread_limit() threads. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ink
