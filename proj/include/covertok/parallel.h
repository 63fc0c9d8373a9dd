// Copyright 2026 The CoverTok Authors.
//
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

#ifndef COVERTOK_PARALLEL_H_
#define COVERTOK_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace covertok {

// Worker cap: COVERTOK_THREADS if set to a positive integer, otherwise the
// number of available cores.
size_t ThreadCount();

// Calls fn(begin, end) on disjoint chunks covering [0, n). Runs inline when
// only one worker is available or n is small.
void ParallelFor(size_t n, const std::function<void(size_t, size_t)>& fn,
                 size_t min_chunk = 1024);

}  // namespace covertok

#endif  // COVERTOK_PARALLEL_H_
