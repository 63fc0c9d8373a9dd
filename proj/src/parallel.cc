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

#include "covertok/parallel.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace covertok {

size_t ThreadCount() {
  const size_t cores = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("COVERTOK_THREADS");
  if (env == nullptr) return cores;
  size_t n = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), n);
  if (ec != std::errc() || n == 0) return cores;
  return n;
}

void ParallelFor(size_t n, const std::function<void(size_t, size_t)>& fn,
                 size_t min_chunk) {
  const size_t workers =
      std::min(ThreadCount(), std::max<size_t>(1, n / std::max<size_t>(1, min_chunk)));
  if (workers <= 1) {
    if (n > 0) fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const size_t chunk = (n + workers - 1) / workers;
  for (size_t begin = 0; begin < n; begin += chunk) {
    threads.emplace_back(fn, begin, std::min(n, begin + chunk));
  }
  for (std::thread& t : threads) t.join();
}

}  // namespace covertok
