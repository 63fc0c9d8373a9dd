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

#include "covertok/unigram.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace covertok {

double ProbTable::Log(double p) const {
  return base == LogBase::kTen ? std::log10(p) : std::log(p);
}

namespace {

absl::StatusOr<ViterbiResult> Viterbi(
    SymbolView word,
    const std::unordered_map<SymbolString, double, SymbolHash, std::equal_to<>>&
        pieces,
    size_t max_len, const ProbTable& table) {
  constexpr double kNone = -std::numeric_limits<double>::infinity();
  const size_t n = word.size();
  std::vector<double> best(n + 1, kNone);
  std::vector<size_t> from(n + 1, 0);
  best[0] = 0;
  for (size_t end = 1; end <= n; ++end) {
    for (size_t len = 1; len <= std::min(max_len, end); ++len) {
      const size_t begin = end - len;
      if (best[begin] == kNone) continue;
      double lp;
      if (len == 1) {
        auto it = table.probs.find(word.substr(begin, 1));
        if (it == table.probs.end()) continue;
        lp = table.Log(it->second);
      } else {
        auto it = pieces.find(word.substr(begin, len));
        if (it == pieces.end()) continue;
        lp = it->second;
      }
      if (best[begin] + lp > best[end]) {
        best[end] = best[begin] + lp;
        from[end] = begin;
      }
    }
  }
  if (best[n] == kNone) {
    return absl::InvalidArgumentError(
        absl::StrCat("word cannot be segmented: ", ToDisplay(word)));
  }
  ViterbiResult result;
  result.log_prob = best[n];
  for (size_t at = n; at > 0; at = from[at]) {
    result.segmentation.boundaries.push_back(at);
  }
  result.segmentation.boundaries.push_back(0);
  std::reverse(result.segmentation.boundaries.begin(),
               result.segmentation.boundaries.end());
  return result;
}

absl::Status CollectPieces(
    std::span<const SymbolString> tokens, const ProbTable& table,
    std::unordered_map<SymbolString, double, SymbolHash, std::equal_to<>>&
        pieces,
    size_t& max_len) {
  max_len = 1;
  for (const SymbolString& t : tokens) {
    auto it = table.probs.find(t);
    if (it == table.probs.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing probability for token ", ToHex(t)));
    }
    pieces[t] = table.Log(it->second);
    max_len = std::max(max_len, t.size());
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<ViterbiResult> ViterbiSegment(
    SymbolView word, std::span<const SymbolString> tokens,
    const ProbTable& table) {
  std::unordered_map<SymbolString, double, SymbolHash, std::equal_to<>> pieces;
  size_t max_len = 1;
  if (absl::Status s = CollectPieces(tokens, table, pieces, max_len); !s.ok()) {
    return s;
  }
  return Viterbi(word, pieces, max_len, table);
}

absl::StatusOr<double> UnigramLogLikelihood(
    std::span<const CountedWord> words, std::span<const SymbolString> tokens,
    const ProbTable& table) {
  std::unordered_map<SymbolString, double, SymbolHash, std::equal_to<>> pieces;
  size_t max_len = 1;
  if (absl::Status s = CollectPieces(tokens, table, pieces, max_len); !s.ok()) {
    return s;
  }
  double total = 0;
  for (const CountedWord& w : words) {
    absl::StatusOr<ViterbiResult> v = Viterbi(w.word, pieces, max_len, table);
    if (!v.ok()) return v.status();
    total += static_cast<double>(w.count) * v->log_prob;
  }
  return total;
}

ProbTable FrequencyProbTable(std::span<const CountedWord> words,
                             std::span<const SymbolString> tokens,
                             LogBase base) {
  std::map<SymbolString, uint64_t> freq;
  for (const SymbolString& t : tokens) freq[t] = 0;
  for (const CountedWord& w : words) {
    for (Symbol s : w.word) freq[SymbolString(1, s)] += w.count;
    for (const SymbolString& t : tokens) {
      if (t.size() < 2) continue;
      for (size_t at = w.word.find(t); at != SymbolString::npos;
           at = w.word.find(t, at + 1)) {
        freq[t] += w.count;
      }
    }
  }
  uint64_t total = 0;
  for (const auto& [t, f] : freq) total += f;
  ProbTable table;
  table.base = base;
  for (const auto& [t, f] : freq) {
    if (f > 0) table.probs[t] = static_cast<double>(f) / static_cast<double>(total);
  }
  return table;
}

absl::StatusOr<ProbTable> ParseProbTable(std::string_view text, LogBase base) {
  ProbTable table;
  table.base = base;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (line.empty()) continue;
    const size_t sp = line.find(' ');
    absl::StatusOr<SymbolString> token =
        sp == std::string_view::npos ? absl::InvalidArgumentError("no field")
                                     : FromHex(line.substr(0, sp));
    double p = 0;
    bool parsed = false;
    if (sp != std::string_view::npos) {
      const std::string_view field = line.substr(sp + 1);
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), p);
      parsed = ec == std::errc() && ptr == field.data() + field.size();
    }
    if (!token.ok() || token->empty() || !parsed || !(p > 0) || p > 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": expected '<token-hex> <probability in (0,1]>'"));
    }
    if (!table.probs.emplace(*std::move(token), p).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": duplicate token"));
    }
  }
  return table;
}

std::string FormatProbTable(const ProbTable& table) {
  std::map<SymbolString, double> sorted(table.probs.begin(), table.probs.end());
  std::string out;
  for (const auto& [t, p] : sorted) {
    absl::StrAppend(&out, ToHex(t), " ", absl::StrFormat("%.17g", p), "\n");
  }
  return out;
}

}  // namespace covertok
