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

#include "covertok/metrics.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "covertok/cover.h"
#include "covertok/parallel.h"
#include "covertok/trainer.h"
#include "covertok/wmc.h"

namespace covertok {

namespace {

// Count-weighted token total, summed over words in parallel.
template <typename Fn>
uint64_t WeightedTokens(std::span<const CountedWord> words, Fn tokens_of) {
  std::atomic<uint64_t> total{0};
  ParallelFor(words.size(), [&](size_t begin, size_t end) {
    uint64_t sum = 0;
    for (size_t w = begin; w < end; ++w) {
      sum += words[w].count * tokens_of(words[w].word);
    }
    total += sum;
  });
  return total;
}

uint64_t TotalCount(std::span<const CountedWord> words) {
  uint64_t n = 0;
  for (const CountedWord& w : words) n += w.count;
  return n;
}

uint64_t TotalSymbols(std::span<const CountedWord> words) {
  uint64_t n = 0;
  for (const CountedWord& w : words) n += w.count * w.word.size();
  return n;
}

uint64_t VocabTokens(std::span<const CountedWord> words,
                     const Vocabulary& vocab, EncodeMode mode) {
  return WeightedTokens(words, [&](SymbolView word) -> uint64_t {
    if (mode == EncodeMode::kOptimal) return PartitionDp(word, vocab).token_count;
    return SegmentationFromLabels(CoverWord(word, vocab)).token_count();
  });
}

uint64_t BpeTokens(std::span<const CountedWord> words,
                   const MergeList& merges) {
  const BpeEncoder encoder(merges);
  return WeightedTokens(words, [&](SymbolView word) -> uint64_t {
    return encoder.Encode(word).size();
  });
}

}  // namespace

absl::StatusOr<double> TokensPerWord(std::span<const CountedWord> words,
                                     const Vocabulary& vocab, EncodeMode mode) {
  if (words.empty()) return absl::InvalidArgumentError("empty corpus");
  return static_cast<double>(VocabTokens(words, vocab, mode)) /
         static_cast<double>(TotalCount(words));
}

absl::StatusOr<double> BpeTokensPerWord(std::span<const CountedWord> words,
                                        const MergeList& merges) {
  if (words.empty()) return absl::InvalidArgumentError("empty corpus");
  return static_cast<double>(BpeTokens(words, merges)) /
         static_cast<double>(TotalCount(words));
}

uint64_t CoverObjective(std::span<const CountedWord> words,
                        const Vocabulary& vocab, EncodeMode mode) {
  return TotalSymbols(words) - VocabTokens(words, vocab, mode);
}

uint64_t BpeCoverObjective(std::span<const CountedWord> words,
                           const MergeList& merges) {
  return TotalSymbols(words) - BpeTokens(words, merges);
}

absl::StatusOr<std::vector<DInstPoint>> DInstSweep(
    std::span<const CountedWord> words, const CandidateSet& candidates,
    std::span<const size_t> ks) {
  if (ks.empty()) return std::vector<DInstPoint>{};
  const size_t max_k = *std::max_element(ks.begin(), ks.end());
  absl::StatusOr<TrainResult> tok = SelectTokens(words, candidates, max_k);
  if (!tok.ok()) return tok.status();
  absl::StatusOr<WmcResult> wmc = GreedWmc(BuildWmc(words, candidates), max_k);
  if (!wmc.ok()) return wmc.status();

  std::vector<DInstPoint> points;
  for (size_t k : ks) {
    if (k == 0) return absl::InvalidArgumentError("invalid budget: k must be >= 1");
    DInstPoint p;
    p.k = k;
    // Both runs stop early once nothing is left to gain; the objective then
    // stays at its final value for every larger k.
    if (!tok->steps.empty()) {
      p.greedtok = tok->steps[std::min(k, tok->steps.size()) - 1].objective;
    }
    if (!wmc->cumulative.empty()) {
      p.greedwmc = wmc->cumulative[std::min(k, wmc->cumulative.size()) - 1];
    }
    if (p.greedwmc == 0) return absl::FailedPreconditionError("degenerate instance");
    p.ratio = static_cast<double>(p.greedtok) / static_cast<double>(p.greedwmc);
    points.push_back(p);
  }
  return points;
}

absl::StatusOr<double> DInst(std::span<const CountedWord> words,
                             const CandidateSet& candidates, size_t k) {
  const size_t ks[] = {k};
  absl::StatusOr<std::vector<DInstPoint>> points = DInstSweep(words, candidates, ks);
  if (!points.ok()) return points.status();
  return points->front().ratio;
}

std::string FormatDInstData(std::span<const DInstPoint> points) {
  std::string out = "# k\tgreedtok\tgreedwmc\td_inst\n";
  for (const DInstPoint& p : points) {
    absl::StrAppend(&out, p.k, "\t", p.greedtok, "\t", p.greedwmc, "\t",
                    absl::StrFormat("%.4f", p.ratio), "\n");
  }
  return out;
}

absl::StatusOr<std::vector<CompressionRow>> RunCompression(
    std::span<const CountedWord> words, const CompressionOptions& options) {
  if (words.empty()) return absl::InvalidArgumentError("empty corpus");
  for (const std::string& algo : options.algorithms) {
    if (algo != kAlgoGreedTok && algo != kAlgoGreedTokOptimal && algo != kAlgoBpe) {
      return absl::InvalidArgumentError(absl::StrCat("unknown algorithm ", algo));
    }
  }
  auto wants = [&](const char* algo) {
    return std::find(options.algorithms.begin(), options.algorithms.end(), algo) !=
           options.algorithms.end();
  };
  using Clock = std::chrono::steady_clock;
  auto seconds_since = [](Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
  };

  std::vector<CompressionRow> rows;
  std::optional<CandidateSet> candidates;
  if (wants(kAlgoGreedTok) || wants(kAlgoGreedTokOptimal)) {
    absl::StatusOr<CandidateSet> c = ExtractCandidates(words, options.candidates);
    if (!c.ok()) return c.status();
    candidates = *std::move(c);
  }
  const double total = static_cast<double>(TotalCount(words));
  const uint64_t symbols = TotalSymbols(words);
  for (size_t k : options.ks) {
    if (candidates) {
      const Clock::time_point start = Clock::now();
      absl::StatusOr<TrainResult> trained = SelectTokens(words, *candidates, k);
      if (!trained.ok()) return trained.status();
      const double train_seconds = seconds_since(start);
      for (const std::string& algo : options.algorithms) {
        if (algo == kAlgoBpe) continue;
        const EncodeMode mode =
            algo == kAlgoGreedTok ? EncodeMode::kGreedy : EncodeMode::kOptimal;
        const uint64_t tokens = VocabTokens(words, trained->vocabulary, mode);
        rows.push_back({algo, k, static_cast<double>(tokens) / total,
                        symbols - tokens, train_seconds});
      }
    }
    if (wants(kAlgoBpe)) {
      const Clock::time_point start = Clock::now();
      absl::StatusOr<MergeList> merges = BpeTrain(words, k);
      if (!merges.ok()) return merges.status();
      const double train_seconds = seconds_since(start);
      const uint64_t tokens = BpeTokens(words, *merges);
      rows.push_back({kAlgoBpe, k, static_cast<double>(tokens) / total,
                      symbols - tokens, train_seconds});
    }
  }
  return rows;
}

std::string FormatCompressionReport(std::span<const CompressionRow> rows,
                                    bool include_timing) {
  std::string out = "algorithm\tk\ttokens_per_word\tobjective";
  if (include_timing) absl::StrAppend(&out, "\tseconds");
  out.push_back('\n');
  std::map<size_t, std::pair<const CompressionRow*, const CompressionRow*>> pairs;
  for (const CompressionRow& r : rows) {
    absl::StrAppend(&out, r.algorithm, "\t", r.k, "\t",
                    absl::StrFormat("%.4f", r.tokens_per_word), "\t",
                    r.objective);
    if (include_timing) absl::StrAppend(&out, "\t", absl::StrFormat("%.4f", r.seconds));
    out.push_back('\n');
    if (r.algorithm == kAlgoGreedTok) pairs[r.k].first = &r;
    if (r.algorithm == kAlgoBpe) pairs[r.k].second = &r;
  }
  for (const auto& [k, pair] : pairs) {
    const auto [gtk, bpe] = pair;
    if (gtk == nullptr || bpe == nullptr || bpe->tokens_per_word == 0) continue;
    const double pct =
        (bpe->tokens_per_word - gtk->tokens_per_word) / bpe->tokens_per_word * 100;
    absl::StrAppend(&out, "improvement_pct\t", k, "\t",
                    absl::StrFormat("%.4f", pct), "\t-");
    if (include_timing) absl::StrAppend(&out, "\t-");
    out.push_back('\n');
  }
  return out;
}

}  // namespace covertok
