// Copyright 2026 The QuadSweep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUADSWEEP_PARALLEL_HPP_
#define QUADSWEEP_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace quadsweep {

// Worker pool size: QUADSWEEP_THREADS when set to a positive integer,
// otherwise the hardware concurrency (at least 1).
int WorkerCount();

// Calls fn(i) for every i in [0, count) on up to `threads` workers (0 means
// WorkerCount()). Items are claimed dynamically; fn must not depend on which
// worker runs it. The first exception thrown by fn is rethrown after all
// workers have stopped.
void ParallelFor(std::size_t count, int threads,
                 const std::function<void(std::size_t)>& fn);

}  // namespace quadsweep

#endif  // QUADSWEEP_PARALLEL_HPP_
