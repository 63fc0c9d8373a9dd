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

#ifndef COVERTOK_METRICS_H_
#define COVERTOK_METRICS_H_

// Compression metrics and the GreedTok / GreedWMC objective ratio.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/bpe.h"
#include "covertok/corpus.h"
#include "covertok/encoder.h"
#include "covertok/vocabulary.h"

namespace covertok {

// Count-weighted mean number of tokens per word. Fails on an empty corpus.
absl::StatusOr<double> TokensPerWord(std::span<const CountedWord> words,
                                     const Vocabulary& vocab, EncodeMode mode);
absl::StatusOr<double> BpeTokensPerWord(std::span<const CountedWord> words,
                                        const MergeList& merges);

// Sum of count(W) * (|W| - tokens) for the given per-word token counter.
uint64_t CoverObjective(std::span<const CountedWord> words,
                        const Vocabulary& vocab, EncodeMode mode);
uint64_t BpeCoverObjective(std::span<const CountedWord> words,
                           const MergeList& merges);

struct DInstPoint {
  size_t k = 0;
  uint64_t greedtok = 0;  // Greedy-state cover objective.
  uint64_t greedwmc = 0;  // Covered weight of the relaxation.
  double ratio = 0;
};

// One GreedTok run and one GreedWMC run at the largest k, read off at every
// requested budget. Fails with "degenerate instance" when GreedWMC covers
// nothing at some k.
absl::StatusOr<std::vector<DInstPoint>> DInstSweep(
    std::span<const CountedWord> words, const CandidateSet& candidates,
    std::span<const size_t> ks);
absl::StatusOr<double> DInst(std::span<const CountedWord> words,
                             const CandidateSet& candidates, size_t k);

// Gnuplot-friendly columns: k, greedtok, greedwmc, ratio.
std::string FormatDInstData(std::span<const DInstPoint> points);

inline constexpr char kAlgoGreedTok[] = "greedtok";
inline constexpr char kAlgoGreedTokOptimal[] = "greedtok-opt";
inline constexpr char kAlgoBpe[] = "bpe";

struct CompressionRow {
  std::string algorithm;
  size_t k = 0;
  double tokens_per_word = 0;
  uint64_t objective = 0;
  double seconds = 0;
};

struct CompressionOptions {
  std::vector<size_t> ks;
  std::vector<std::string> algorithms = {kAlgoGreedTok, kAlgoBpe};
  CandidateOptions candidates;
};

// Trains every algorithm at every k and measures it on the same words.
// "greedtok-opt" reuses the GreedTok vocabulary with optimal encoding.
absl::StatusOr<std::vector<CompressionRow>> RunCompression(
    std::span<const CountedWord> words, const CompressionOptions& options);

// TSV with header `algorithm k tokens_per_word objective [seconds]`, fixed
// 4-decimal reals. For each k with both GreedTok and BPE rows, an
// `improvement_pct` row carries (BPE - GTK) / BPE * 100 in the tokens/word
// column. Leave timing out for byte-identical reruns.
std::string FormatCompressionReport(std::span<const CompressionRow> rows,
                                    bool include_timing);

}  // namespace covertok

#endif  // COVERTOK_METRICS_H_
