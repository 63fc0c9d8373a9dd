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

#ifndef COVERTOK_TRAINER_H_
#define COVERTOK_TRAINER_H_

// GreedTok token selection.
//
// Every candidate's occurrences are indexed once. The trainer keeps one cover
// state over the whole corpus and repeatedly accepts the candidate whose
// occurrences would cover the most count-weighted uncovered pairs, applying
// it at every occurrence that is still coverable. Scores are kept in a
// max-priority queue and recomputed lazily, only when a stale entry reaches
// the head.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/corpus.h"
#include "covertok/cover.h"
#include "covertok/vocabulary.h"

namespace covertok {

struct Occurrence {
  uint32_t word = 0;
  uint32_t start = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Candidate index -> occurrences sorted by (word, start).
class OccurrenceIndex {
 public:
  OccurrenceIndex() = default;

  static OccurrenceIndex Build(std::span<const CountedWord> words,
                               const CandidateSet& candidates);

  size_t num_tokens() const {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  std::span<const Occurrence> occurrences(size_t token) const {
    return {entries_.data() + offsets_[token],
            offsets_[token + 1] - offsets_[token]};
  }
  size_t total() const { return entries_.size(); }

 private:
  std::vector<size_t> offsets_;
  std::vector<Occurrence> entries_;
};

// Count-weighted number of currently uncovered pairs that a token of
// `token_length` symbols would cover if accepted now. Occurrences are visited
// in order; one that overlaps an occurrence already counted in this call is
// skipped, so overlapping repeats (aya in ayaya) are not double counted.
// `state` is not modified.
uint64_t ScoreToken(size_t token_length,
                    std::span<const Occurrence> occurrences,
                    const CoverState& state,
                    std::span<const CountedWord> words);

struct TrainerOptions {
  // Stale entries rescored per queue visit. 1 reproduces the classic
  // pop-one/rescore-one lazy loop.
  size_t rescore_batch = 1;
};

struct SelectionStep {
  Rank rank = 0;
  SymbolString token;
  uint64_t gain = 0;
  uint64_t objective = 0;  // Cumulative after this step.
};

struct TrainResult {
  Vocabulary vocabulary;
  std::vector<SelectionStep> steps;
  uint64_t objective = 0;
  uint64_t rescores = 0;  // Score evaluations after the initial pass.
  CoverState state;
};

// Owns the cover state for one training run. Not thread-safe.
class GreedTokTrainer {
 public:
  // `words` and `candidates` must outlive the trainer.
  GreedTokTrainer(std::span<const CountedWord> words,
                  const CandidateSet& candidates);

  uint64_t Score(size_t candidate) const;

  // Applies `candidate` with `rank` at each occurrence that passes CanCover,
  // in occurrence order. Returns the realized count-weighted gain.
  uint64_t Accept(size_t candidate, Rank rank);

  // Lazy greedy loop. Stops after k acceptances or when the best fresh
  // score is 0. Fails with "invalid budget" when k == 0.
  absl::StatusOr<TrainResult> Run(size_t k, const TrainerOptions& options = {});

  const CoverState& state() const { return state_; }
  const OccurrenceIndex& index() const { return index_; }
  uint64_t objective() const { return objective_; }

 private:
  std::span<const CountedWord> words_;
  const CandidateSet& candidates_;
  OccurrenceIndex index_;
  CoverState state_;
  std::vector<bool> accepted_;
  uint64_t objective_ = 0;
};

absl::StatusOr<TrainResult> SelectTokens(std::span<const CountedWord> words,
                                         const CandidateSet& candidates,
                                         size_t k,
                                         const TrainerOptions& options = {});

// TSV with a header row: rank, token_hex, gain, objective.
std::string FormatTrainingLog(const TrainResult& result);

}  // namespace covertok

#endif  // COVERTOK_TRAINER_H_
