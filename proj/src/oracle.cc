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

#include "covertok/oracle.h"

#include <algorithm>
#include <limits>

#include "absl/status/status.h"
#include "covertok/cover.h"
#include "covertok/vocabulary.h"

namespace covertok {

uint64_t CountSubsets(size_t n, size_t k) {
  k = std::min(k, n);
  uint64_t total = 0;
  uint64_t binom = 1;  // C(n, i)
  for (size_t i = 0; i <= k; ++i) {
    if (total > std::numeric_limits<uint64_t>::max() - binom) {
      return std::numeric_limits<uint64_t>::max();
    }
    total += binom;
    if (i == k) break;
    const unsigned __int128 next =
        static_cast<unsigned __int128>(binom) * (n - i) / (i + 1);
    if (next > std::numeric_limits<uint64_t>::max()) {
      return std::numeric_limits<uint64_t>::max();
    }
    binom = static_cast<uint64_t>(next);
  }
  return total;
}

absl::StatusOr<BruteForceResult> BruteForceTok(
    std::span<const CountedWord> words,
    std::span<const SymbolString> candidates, size_t k) {
  if (candidates.size() > kOracleMaxCandidates ||
      CountSubsets(candidates.size(), k) > kOracleSubsetLimit) {
    return absl::ResourceExhaustedError("oracle limit exceeded");
  }
  k = std::min(k, candidates.size());
  uint64_t total_symbols = 0;
  for (const CountedWord& w : words) total_symbols += w.count * w.word.size();

  BruteForceResult best;
  bool have_best = false;
  std::vector<size_t> pick;
  // Sizes in increasing order, combinations in lexicographic order.
  for (size_t size = 0; size <= k; ++size) {
    pick.resize(size);
    for (size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<SymbolString> tokens;
      tokens.reserve(size);
      for (size_t i : pick) tokens.push_back(candidates[i]);
      absl::StatusOr<Vocabulary> vocab = Vocabulary::FromTokens(std::move(tokens));
      if (!vocab.ok()) return vocab.status();
      uint64_t objective = 0;
      for (const CountedWord& w : words) {
        objective += w.count * CoverExact(w.word, *vocab);
      }
      if (!have_best || objective > best.objective ||
          (objective == best.objective && pick < best.chosen)) {
        best.chosen = pick;
        best.objective = objective;
        have_best = true;
      }
      // Advance to the next combination.
      size_t i = size;
      while (i > 0 && pick[i - 1] == candidates.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  best.partitions = total_symbols - best.objective;
  return best;
}

}  // namespace covertok
