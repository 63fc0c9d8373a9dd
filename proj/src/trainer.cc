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

#include "covertok/trainer.h"

#include <algorithm>
#include <cassert>
#include <queue>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "covertok/parallel.h"

namespace covertok {

OccurrenceIndex OccurrenceIndex::Build(std::span<const CountedWord> words,
                                       const CandidateSet& candidates) {
  struct Hit {
    uint32_t token;
    Occurrence occ;
  };
  std::vector<Hit> hits;
  const size_t max_len = candidates.max_length();
  for (size_t w = 0; w < words.size(); ++w) {
    const SymbolView word = words[w].word;
    for (size_t i = 0; i + 2 <= word.size(); ++i) {
      const size_t longest = std::min(max_len, word.size() - i);
      for (size_t len = 2; len <= longest; ++len) {
        if (auto id = candidates.IndexOf(word.substr(i, len))) {
          hits.push_back({static_cast<uint32_t>(*id),
                          {static_cast<uint32_t>(w), static_cast<uint32_t>(i)}});
        }
      }
    }
  }
  // Counting sort by token; hits are already in (word, start) order.
  OccurrenceIndex index;
  index.offsets_.assign(candidates.size() + 1, 0);
  for (const Hit& h : hits) ++index.offsets_[h.token + 1];
  for (size_t t = 0; t < candidates.size(); ++t) {
    index.offsets_[t + 1] += index.offsets_[t];
  }
  index.entries_.resize(hits.size());
  std::vector<size_t> cursor(index.offsets_.begin(), index.offsets_.end() - 1);
  for (const Hit& h : hits) index.entries_[cursor[h.token]++] = h.occ;
  return index;
}

uint64_t ScoreToken(size_t token_length,
                    std::span<const Occurrence> occurrences,
                    const CoverState& state,
                    std::span<const CountedWord> words) {
  // Occurrences counted earlier in this call act as an overlay on `state`.
  // Because the list is sorted and all occurrences have the same length,
  // the only overlay mark that can block an occurrence is the one left by
  // the last counted occurrence in the same word.
  uint64_t score = 0;
  uint32_t overlay_word = UINT32_MAX;
  size_t overlay_end = 0;  // Symbol index one past the last counted cover.
  for (const Occurrence& occ : occurrences) {
    if (occ.word == overlay_word && occ.start < overlay_end) continue;
    const std::span<const Rank> labels = state.labels(occ.word);
    if (!CanCoverAt(labels, occ.start, token_length)) continue;
    size_t fresh = 0;
    for (size_t j = occ.start; j + 1 < occ.start + token_length; ++j) {
      fresh += labels[j] == 0;
    }
    score += words[occ.word].count * fresh;
    overlay_word = occ.word;
    overlay_end = occ.start + token_length;
  }
  return score;
}

GreedTokTrainer::GreedTokTrainer(std::span<const CountedWord> words,
                                 const CandidateSet& candidates)
    : words_(words),
      candidates_(candidates),
      index_(OccurrenceIndex::Build(words, candidates)),
      state_(words),
      accepted_(candidates.size(), false) {}

uint64_t GreedTokTrainer::Score(size_t candidate) const {
  return ScoreToken(candidates_.token(candidate).size(),
                    index_.occurrences(candidate), state_, words_);
}

uint64_t GreedTokTrainer::Accept(size_t candidate, Rank rank) {
  const size_t length = candidates_.token(candidate).size();
  uint64_t gain = 0;
  for (const Occurrence& occ : index_.occurrences(candidate)) {
    std::span<Rank> labels = state_.labels(occ.word);
    if (!CanCoverAt(labels, occ.start, length)) continue;
    gain += words_[occ.word].count *
            ApplyCoverAt(labels, occ.start, length, rank);
  }
  accepted_[candidate] = true;
  objective_ += gain;
  return gain;
}

namespace {

struct QueueEntry {
  uint64_t score;
  uint32_t candidate;
  uint32_t epoch;  // Number of acceptances when `score` was computed.
};

// Max-heap on score; equal scores surface the lexicographically smaller
// token (lower candidate index) first.
struct QueueLess {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.score != b.score) return a.score < b.score;
    return a.candidate > b.candidate;
  }
};

}  // namespace

absl::StatusOr<TrainResult> GreedTokTrainer::Run(size_t k,
                                                 const TrainerOptions& options) {
  if (k == 0) return absl::InvalidArgumentError("invalid budget: k must be >= 1");
  if (candidates_.empty()) {
    return absl::InvalidArgumentError("empty candidate set");
  }
  const size_t batch = std::max<size_t>(1, options.rescore_batch);

  std::vector<uint64_t> initial(candidates_.size());
  ParallelFor(candidates_.size(), [&](size_t begin, size_t end) {
    for (size_t c = begin; c < end; ++c) initial[c] = Score(c);
  });
  std::vector<QueueEntry> heap;
  heap.reserve(candidates_.size());
  for (size_t c = 0; c < candidates_.size(); ++c) {
    if (!accepted_[c]) heap.push_back({initial[c], static_cast<uint32_t>(c), 0});
  }
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueLess> queue(
      QueueLess{}, std::move(heap));

  TrainResult result;
  std::vector<SymbolString> selected;
  uint32_t epoch = 0;
  while (selected.size() < k && !queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    if (top.epoch != epoch) {
      const uint64_t fresh = Score(top.candidate);
      ++result.rescores;
      if (fresh != top.score) {
        queue.push({fresh, top.candidate, epoch});
        // Refresh a few more stale entries from the head in the same visit.
        std::vector<QueueEntry> refreshed;
        for (size_t b = 1; b < batch && !queue.empty(); ++b) {
          QueueEntry next = queue.top();
          if (next.epoch == epoch) break;
          queue.pop();
          next.score = Score(next.candidate);
          next.epoch = epoch;
          ++result.rescores;
          refreshed.push_back(next);
        }
        for (const QueueEntry& e : refreshed) queue.push(e);
        continue;
      }
    }
    if (top.score == 0) break;

    const Rank rank = static_cast<Rank>(selected.size() + 1);
    const uint64_t gain = Accept(top.candidate, rank);
    assert(gain == top.score);
    selected.push_back(candidates_.token(top.candidate));
    result.steps.push_back(
        {rank, candidates_.token(top.candidate), gain, objective_});
    ++epoch;
  }

  auto vocab = Vocabulary::FromTokens(std::move(selected));
  if (!vocab.ok()) return vocab.status();
  result.vocabulary = *std::move(vocab);
  result.objective = objective_;
  result.state = state_;
  return result;
}

absl::StatusOr<TrainResult> SelectTokens(std::span<const CountedWord> words,
                                         const CandidateSet& candidates,
                                         size_t k,
                                         const TrainerOptions& options) {
  GreedTokTrainer trainer(words, candidates);
  return trainer.Run(k, options);
}

std::string FormatTrainingLog(const TrainResult& result) {
  std::string out = "rank\ttoken_hex\tgain\tobjective\n";
  for (const SelectionStep& s : result.steps) {
    absl::StrAppend(&out, s.rank, "\t", ToHex(s.token), "\t", s.gain, "\t",
                    s.objective, "\n");
  }
  return out;
}

}  // namespace covertok
