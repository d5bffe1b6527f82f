// Copyright 2026 Google LLC
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

#ifndef STAR_PARALLEL_H
#define STAR_PARALLEL_H

#include <cstddef>
#include <functional>

namespace star {

/// Thread count to use: `requested` if positive, else the STAR_THREADS environment variable,
/// else the hardware concurrency.
int resolve_threads(int requested);

/// Calls task(i) for i in [0, n) on up to `threads` workers. Tasks must write to disjoint
/// outputs; the first exception thrown by any task is rethrown after all workers stop.
void parallel_for(size_t n, int threads, const std::function<void(size_t)> &task);

}  // namespace star

#endif
