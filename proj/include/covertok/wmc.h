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

#ifndef COVERTOK_WMC_H_
#define COVERTOK_WMC_H_

// Weighted maximum coverage relaxation of token selection. Each element is
// one adjacent pair of one word, weighted by the word's count, and each
// candidate token is the set of pairs its occurrences would cover. Overlap
// between occurrences is ignored.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/corpus.h"

namespace covertok {

class WmcInstance {
 public:
  WmcInstance() = default;

  // Direct construction; element ids in `sets` must index `weights`.
  static absl::StatusOr<WmcInstance> FromSets(
      std::vector<uint64_t> weights, std::vector<std::vector<uint32_t>> sets);

  size_t num_elements() const { return weights_.size(); }
  size_t num_sets() const {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  uint64_t weight(size_t element) const { return weights_[element]; }
  // Sorted, duplicate-free element ids.
  std::span<const uint32_t> set(size_t s) const {
    return {elements_.data() + offsets_[s], offsets_[s + 1] - offsets_[s]};
  }
  uint64_t total_weight() const;

 private:
  friend WmcInstance BuildWmc(std::span<const CountedWord>,
                              const CandidateSet&);
  std::vector<uint64_t> weights_;
  std::vector<size_t> offsets_;
  std::vector<uint32_t> elements_;
};

// Element ids run word by word, pair by pair, in corpus order. Set s is the
// candidate of index s.
WmcInstance BuildWmc(std::span<const CountedWord> words,
                     const CandidateSet& candidates);

struct WmcResult {
  std::vector<size_t> chosen;  // Set indices in selection order.
  uint64_t objective = 0;
  // cumulative[i] = covered weight after i + 1 selections.
  std::vector<uint64_t> cumulative;
};

// Lazy greedy. Ties go to the lower set index. Stops after k sets or when
// no set adds weight. Fails with "invalid budget" when k == 0.
absl::StatusOr<WmcResult> GreedWmc(const WmcInstance& instance, size_t k);

}  // namespace covertok

#endif  // COVERTOK_WMC_H_
