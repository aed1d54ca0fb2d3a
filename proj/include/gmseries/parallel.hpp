/*
 * Copyright 2026 The gmseries Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GMSERIES_PARALLEL_HPP
#define GMSERIES_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace gmseries {

/// Worker count for grid sweeps: hardware concurrency capped by the
/// GM_SERIES_THREADS environment variable, never below 1.
int configured_threads();

/// Runs fn(begin, end) over contiguous chunks of [0, n) on the configured
/// threads. Chunk boundaries are aligned to `align` so per-index results do
/// not depend on the thread count. The first worker exception, if any, is
/// rethrown after all workers join.
void parallel_for_chunks(std::size_t n, std::size_t align,
                         const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace gmseries

#endif  // GMSERIES_PARALLEL_HPP
