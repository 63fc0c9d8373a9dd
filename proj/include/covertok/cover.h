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

#ifndef COVERTOK_COVER_H_
#define COVERTOK_COVER_H_

// Cover-state semantics shared by the trainer and the encoder, plus the exact
// per-word partition and cover oracles.
//
// A word W of length n has n-1 adjacent-symbol pairs. Its cover labels hold,
// for each pair, 0 when the pair is split between two tokens, or the rank of
// the selected token whose occurrence spans it. Maximal runs of one nonzero
// label are token occurrences and zeros are partition boundaries, so a fully
// resolved word emits 1 + (number of zero labels) tokens.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "covertok/corpus.h"
#include "covertok/symbols.h"
#include "covertok/vocabulary.h"

namespace covertok {

// Labels for every word of a corpus, stored contiguously.
class CoverState {
 public:
  CoverState() = default;
  explicit CoverState(std::span<const CountedWord> words);

  size_t num_words() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<Rank> labels(size_t word) {
    return {labels_.data() + offsets_[word], offsets_[word + 1] - offsets_[word]};
  }
  std::span<const Rank> labels(size_t word) const {
    return {labels_.data() + offsets_[word], offsets_[word + 1] - offsets_[word]};
  }

 private:
  std::vector<size_t> offsets_;
  std::vector<Rank> labels_;
};

// Whether an occurrence of a token of `length` symbols starting at `start`
// may be covered: both of its outer pairs must be uncovered (or be the word
// boundary). Interior labels are not inspected; a later, longer token may
// override covers nested strictly inside it. Unchecked hot-path variant.
inline bool CanCoverAt(std::span<const Rank> labels, size_t start,
                       size_t length) {
  const size_t end = start + length;
  return (start == 0 || labels[start - 1] == 0) &&
         (end == labels.size() + 1 || labels[end - 1] == 0);
}

// Sets labels [start, start + length - 1) to `rank` and returns how many of
// them were previously 0.
inline size_t ApplyCoverAt(std::span<Rank> labels, size_t start, size_t length,
                           Rank rank) {
  size_t fresh = 0;
  for (size_t j = start; j + 1 < start + length; ++j) {
    fresh += labels[j] == 0;
    labels[j] = rank;
  }
  return fresh;
}

// Checked variants. Both fail with "occurrence mismatch" unless `token`
// occurs in `word` at `start` and `labels` has |word|-1 entries.
absl::StatusOr<bool> CanCover(std::span<const Rank> labels, SymbolView word,
                              SymbolView token, size_t start);
// Fails with "invalid cover" when CanCover does not hold or rank is 0.
absl::Status ApplyCover(std::span<Rank> labels, SymbolView word,
                        SymbolView token, size_t start, Rank rank);

// Checks `labels` against the integer-program constraints for `word` under
// `vocab`: every nonzero run is exactly one occurrence of the token of that
// rank, and no symbol is shared by two runs.
absl::Status ValidateCover(SymbolView word, std::span<const Rank> labels,
                           const Vocabulary& vocab);

// Boundaries 0 = b_0 < b_1 < ... < b_m = |W|; segment i is [b_i, b_{i+1}).
struct Segmentation {
  std::vector<size_t> boundaries;

  size_t token_count() const {
    return boundaries.empty() ? 0 : boundaries.size() - 1;
  }
  std::vector<SymbolView> Split(SymbolView word) const;
};

// Segmentation delineated at the zero labels.
Segmentation SegmentationFromLabels(std::span<const Rank> labels);

struct PartitionResult {
  size_t token_count = 0;
  Segmentation segmentation;
};

// Minimum number of tokens from S plus singletons that concatenate to
// `word`. Among optimal segmentations the witness takes the longest token
// at each position from the left.
PartitionResult PartitionDp(SymbolView word, const Vocabulary& vocab);

// Maximum number of adjacent pairs coverable by non-overlapping occurrences
// of selected tokens. Computed independently of PartitionDp; the two satisfy
// |W| = partition + cover.
size_t CoverExact(SymbolView word, const Vocabulary& vocab);

}  // namespace covertok

#endif  // COVERTOK_COVER_H_
