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

#ifndef COVERTOK_UNIGRAM_H_
#define COVERTOK_UNIGRAM_H_

// Unigram language-model likelihood of a corpus under a token set.

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "absl/status/statusor.h"
#include "covertok/corpus.h"
#include "covertok/cover.h"
#include "covertok/symbols.h"

namespace covertok {

enum class LogBase { kNatural, kTen };

struct ProbTable {
  std::unordered_map<SymbolString, double, SymbolHash, std::equal_to<>> probs;
  LogBase base = LogBase::kNatural;

  double Log(double p) const;
};

struct ViterbiResult {
  double log_prob = 0;
  Segmentation segmentation;
};

// Most probable segmentation of `word` into singletons and `tokens`, each
// weighted by its entry in `table`. Pieces without an entry are unavailable.
// Equal scores keep the segmentation found first scanning end positions left
// to right and piece lengths short to long.
absl::StatusOr<ViterbiResult> ViterbiSegment(
    SymbolView word, std::span<const SymbolString> tokens,
    const ProbTable& table);

// Sum over words of count(W) * log P(W*). Fails when some word cannot be
// segmented or a listed token has no probability.
absl::StatusOr<double> UnigramLogLikelihood(
    std::span<const CountedWord> words, std::span<const SymbolString> tokens,
    const ProbTable& table);

// Frequency proxy: every listed token and every singleton gets its
// count-weighted number of occurrences in `words`, normalized to sum to 1.
ProbTable FrequencyProbTable(std::span<const CountedWord> words,
                             std::span<const SymbolString> tokens,
                             LogBase base = LogBase::kNatural);

// `<token-hex> <decimal probability>` per line.
absl::StatusOr<ProbTable> ParseProbTable(std::string_view text, LogBase base);
std::string FormatProbTable(const ProbTable& table);

}  // namespace covertok

#endif  // COVERTOK_UNIGRAM_H_
