// Copyright 2026 The bpfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BPFREE_QCORE_PARALLEL_HPP
#define BPFREE_QCORE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace bpfree {

/// Thread count from BPFREE_THREADS, else 1.
std::size_t default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Every index is
/// processed exactly once; callers write results into per-index slots and
/// reduce in index order, so outputs never depend on the thread count. The
/// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

} // namespace bpfree

#endif // BPFREE_QCORE_PARALLEL_HPP
