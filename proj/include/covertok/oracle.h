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

#ifndef COVERTOK_ORACLE_H_
#define COVERTOK_ORACLE_H_

// Exhaustive token selection for small instances.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/corpus.h"
#include "covertok/symbols.h"

namespace covertok {

// Largest number of subsets the solver will visit: every subset of size at
// most 5 drawn from 20 candidates.
inline constexpr uint64_t kOracleSubsetLimit = 21700;
inline constexpr size_t kOracleMaxCandidates = 20;

struct BruteForceResult {
  std::vector<size_t> chosen;  // Ascending candidate indices.
  uint64_t objective = 0;      // Sum of count(W) * cover_exact(W, S).
  uint64_t partitions = 0;     // Sum of count(W) * partition(W, S).
};

// Maximizes the exact cover objective over every subset of at most k
// candidates. Ties go to the lexicographically least index list. Fails with
// "oracle limit exceeded" past kOracleMaxCandidates candidates or
// kOracleSubsetLimit subsets.
absl::StatusOr<BruteForceResult> BruteForceTok(
    std::span<const CountedWord> words,
    std::span<const SymbolString> candidates, size_t k);

// Number of subsets of size at most k from n items, saturating at
// UINT64_MAX.
uint64_t CountSubsets(size_t n, size_t k);

}  // namespace covertok

#endif  // COVERTOK_ORACLE_H_
