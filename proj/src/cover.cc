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

#include "covertok/cover.h"

#include <algorithm>
#include <limits>

#include "absl/strings/str_cat.h"

namespace covertok {

CoverState::CoverState(std::span<const CountedWord> words) {
  offsets_.reserve(words.size() + 1);
  size_t total = 0;
  offsets_.push_back(0);
  for (const CountedWord& e : words) {
    total += e.word.empty() ? 0 : e.word.size() - 1;
    offsets_.push_back(total);
  }
  labels_.assign(total, 0);
}

namespace {

absl::Status CheckOccurrence(std::span<const Rank> labels, SymbolView word,
                             SymbolView token, size_t start) {
  if (word.empty() || labels.size() != word.size() - 1) {
    return absl::InvalidArgumentError(
        "occurrence mismatch: label count differs from |W|-1");
  }
  if (token.empty() || start > word.size() ||
      word.substr(start, token.size()) != token) {
    return absl::InvalidArgumentError(
        absl::StrCat("occurrence mismatch: ", ToDisplay(token), " not at ",
                     start, " in ", ToDisplay(word)));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<bool> CanCover(std::span<const Rank> labels, SymbolView word,
                              SymbolView token, size_t start) {
  if (absl::Status s = CheckOccurrence(labels, word, token, start); !s.ok()) {
    return s;
  }
  return CanCoverAt(labels, start, token.size());
}

absl::Status ApplyCover(std::span<Rank> labels, SymbolView word,
                        SymbolView token, size_t start, Rank rank) {
  absl::StatusOr<bool> ok = CanCover(labels, word, token, start);
  if (!ok.ok()) return ok.status();
  if (!*ok || rank == 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("invalid cover: ", ToDisplay(token), " at ", start));
  }
  ApplyCoverAt(labels, start, token.size(), rank);
  return absl::OkStatus();
}

absl::Status ValidateCover(SymbolView word, std::span<const Rank> labels,
                           const Vocabulary& vocab) {
  if (word.empty() || labels.size() != word.size() - 1) {
    return absl::InvalidArgumentError("label count differs from |W|-1");
  }
  size_t i = 0;
  while (i < labels.size()) {
    const Rank r = labels[i];
    if (r == 0) {
      ++i;
      continue;
    }
    size_t end = i;
    while (end < labels.size() && labels[end] == r) ++end;
    if (r > vocab.size()) {
      return absl::FailedPreconditionError(
          absl::StrCat("pair ", i, " covered by unselected rank ", r));
    }
    const SymbolString& token = vocab.token(r);
    // Whole-token coverage: the run spans exactly |T|-1 pairs and spells T.
    if (end - i != token.size() - 1 || word.substr(i, token.size()) != token) {
      return absl::FailedPreconditionError(
          absl::StrCat("run of rank ", r, " at pair ", i,
                       " is not one occurrence of ", ToDisplay(token)));
    }
    // No symbol shared with a neighbouring run.
    if (end < labels.size() && labels[end] != 0) {
      return absl::FailedPreconditionError(
          absl::StrCat("runs of ranks ", r, " and ", labels[end],
                       " share symbol ", end));
    }
    i = end;
  }
  return absl::OkStatus();
}

std::vector<SymbolView> Segmentation::Split(SymbolView word) const {
  std::vector<SymbolView> out;
  for (size_t i = 0; i + 1 < boundaries.size(); ++i) {
    out.push_back(word.substr(boundaries[i], boundaries[i + 1] - boundaries[i]));
  }
  return out;
}

Segmentation SegmentationFromLabels(std::span<const Rank> labels) {
  Segmentation seg;
  seg.boundaries.push_back(0);
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0) seg.boundaries.push_back(i + 1);
  }
  seg.boundaries.push_back(labels.size() + 1);
  return seg;
}

PartitionResult PartitionDp(SymbolView word, const Vocabulary& vocab) {
  const size_t n = word.size();
  PartitionResult result;
  if (n == 0) {
    result.segmentation.boundaries = {0};
    return result;
  }
  constexpr size_t kInf = std::numeric_limits<size_t>::max();
  // cost[a]: fewest tokens spelling word[a, n); step[a]: chosen length.
  std::vector<size_t> cost(n + 1, kInf);
  std::vector<size_t> step(n + 1, 0);
  cost[n] = 0;
  const size_t max_len = vocab.max_token_length();
  for (size_t a = n; a-- > 0;) {
    const size_t longest = std::min(max_len, n - a);
    for (size_t len = longest; len >= 1; --len) {
      if (len > 1 && !vocab.Contains(word.substr(a, len))) continue;
      if (cost[a + len] + 1 < cost[a]) {
        cost[a] = cost[a + len] + 1;
        step[a] = len;
      }
    }
  }
  result.token_count = cost[0];
  auto& b = result.segmentation.boundaries;
  b.push_back(0);
  for (size_t a = 0; a < n; a += step[a]) b.push_back(a + step[a]);
  return result;
}

size_t CoverExact(SymbolView word, const Vocabulary& vocab) {
  const size_t n = word.size();
  if (n < 2) return 0;
  // best[b]: most pairs coverable inside word[0, b).
  std::vector<size_t> best(n + 1, 0);
  const size_t max_len = vocab.max_token_length();
  for (size_t b = 2; b <= n; ++b) {
    best[b] = best[b - 1];
    for (size_t len = 2; len <= std::min(max_len, b); ++len) {
      if (vocab.Contains(word.substr(b - len, len))) {
        best[b] = std::max(best[b], best[b - len] + len - 1);
      }
    }
  }
  return best[n];
}

}  // namespace covertok
