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

#include "covertok/corpus.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace covertok {

absl::StatusOr<Corpus> Corpus::FromEntries(std::vector<CountedWord> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CountedWord& a, const CountedWord& b) {
              return a.word < b.word;
            });
  Corpus corpus;
  for (size_t i = 0; i < entries.size(); ++i) {
    const CountedWord& e = entries[i];
    if (e.word.empty()) return absl::InvalidArgumentError("empty word");
    if (e.count == 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("zero count for word ", ToDisplay(e.word)));
    }
    if (e.word.find(kMarker, 1) != SymbolString::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("marker past position 0 in ", ToDisplay(e.word)));
    }
    if (i > 0 && entries[i - 1].word == e.word) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate word ", ToDisplay(e.word)));
    }
    corpus.total_words_ += e.count;
    corpus.total_symbols_ += e.count * e.word.size();
  }
  corpus.words_ = std::move(entries);
  return corpus;
}

std::optional<uint64_t> Corpus::count(SymbolView word) const {
  auto it = std::lower_bound(
      words_.begin(), words_.end(), word,
      [](const CountedWord& e, SymbolView w) { return SymbolView(e.word) < w; });
  if (it == words_.end() || it->word != word) return std::nullopt;
  return it->count;
}

std::vector<SymbolString> SplitWords(std::string_view text) {
  std::vector<SymbolString> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    const size_t begin = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    if (i == begin) break;
    SymbolString w;
    w.reserve(i - begin + 1);
    w.push_back(kMarker);
    for (size_t j = begin; j < i; ++j) {
      w.push_back(static_cast<Symbol>(static_cast<unsigned char>(text[j])));
    }
    words.push_back(std::move(w));
  }
  return words;
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (IsAsciiSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

Corpus Ingest(std::string_view text) {
  std::unordered_map<SymbolString, uint64_t, SymbolHash, std::equal_to<>>
      counts;
  for (SymbolString& w : SplitWords(text)) ++counts[std::move(w)];
  std::vector<CountedWord> entries;
  entries.reserve(counts.size());
  for (auto& [word, count] : counts) entries.push_back({word, count});
  // Ingested words are non-empty, distinct and marker-prefixed.
  return *Corpus::FromEntries(std::move(entries));
}

absl::StatusOr<Corpus> ParseWordCounts(std::string_view tsv) {
  std::vector<CountedWord> entries;
  size_t line_no = 0;
  while (!tsv.empty()) {
    ++line_no;
    const size_t eol = tsv.find('\n');
    std::string_view line = tsv.substr(0, eol);
    tsv.remove_prefix(eol == std::string_view::npos ? tsv.size() : eol + 1);
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected <hex>\\t<count>"));
    }
    auto word = FromHex(line.substr(0, tab));
    if (!word.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": ", word.status().message()));
    }
    std::string_view count_text = line.substr(tab + 1);
    uint64_t count = 0;
    auto [ptr, ec] = std::from_chars(
        count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size() ||
        count_text.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": bad count '", std::string(count_text), "'"));
    }
    entries.push_back({*std::move(word), count});
  }
  return Corpus::FromEntries(std::move(entries));
}

std::string FormatWordCounts(const Corpus& corpus) {
  std::string out;
  for (const CountedWord& e : corpus.words()) {
    absl::StrAppend(&out, ToHex(e.word), "\t", e.count, "\n");
  }
  return out;
}

std::optional<size_t> CandidateSet::IndexOf(SymbolView token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void CandidateSet::BuildIndex() {
  index_.clear();
  index_.reserve(tokens_.size());
  max_length_ = 0;
  for (size_t i = 0; i < tokens_.size(); ++i) {
    index_.emplace(tokens_[i], i);
    max_length_ = std::max(max_length_, tokens_[i].size());
  }
}

namespace {

// Occurrence-weighted frequency of every token in `wanted`, or of every
// substring with length in [2, max_len] when `wanted` is null.
using FrequencyMap =
    std::unordered_map<SymbolString, uint64_t, SymbolHash, std::equal_to<>>;

void CountSubstrings(std::span<const CountedWord> words, size_t max_len,
                     bool insert_missing, FrequencyMap& freq) {
  for (const CountedWord& e : words) {
    const SymbolView w = e.word;
    for (size_t i = 0; i + 2 <= w.size(); ++i) {
      const size_t longest = std::min(max_len, w.size() - i);
      for (size_t len = 2; len <= longest; ++len) {
        const SymbolView sub = w.substr(i, len);
        auto it = freq.find(sub);
        if (it != freq.end()) {
          it->second += e.count;
        } else if (insert_missing) {
          freq.emplace(SymbolString(sub), e.count);
        }
      }
    }
  }
}

}  // namespace

absl::StatusOr<CandidateSet> CandidateSet::FromTokens(
    std::span<const CountedWord> words, std::vector<SymbolString> tokens) {
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  FrequencyMap freq;
  size_t max_len = 0;
  for (const SymbolString& t : tokens) {
    if (t.size() < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("candidate is a singleton: ", ToDisplay(t)));
    }
    freq.emplace(t, 0);
    max_len = std::max(max_len, t.size());
  }
  CountSubstrings(words, max_len, /*insert_missing=*/false, freq);
  CandidateSet set;
  for (SymbolString& t : tokens) {
    const uint64_t f = freq.at(t);
    if (f == 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("candidate occurs in no word: ", ToDisplay(t)));
    }
    set.frequencies_.push_back(f);
    set.tokens_.push_back(std::move(t));
  }
  set.BuildIndex();
  return set;
}

absl::StatusOr<CandidateSet> ExtractCandidates(
    std::span<const CountedWord> words, const CandidateOptions& options) {
  if (words.empty()) return absl::InvalidArgumentError("empty corpus");
  if (options.max_len < 2 || options.min_freq < 1) {
    return absl::InvalidArgumentError("max_len must be >= 2, min_freq >= 1");
  }
  FrequencyMap freq;
  CountSubstrings(words, options.max_len, /*insert_missing=*/true, freq);

  std::vector<std::pair<SymbolString, uint64_t>> kept;
  kept.reserve(freq.size());
  for (auto& [token, f] : freq) {
    if (f >= options.min_freq) kept.emplace_back(token, f);
  }
  freq.clear();
  std::sort(kept.begin(), kept.end());

  CandidateSet set;
  set.tokens_.reserve(kept.size());
  set.frequencies_.reserve(kept.size());
  for (auto& [token, f] : kept) {
    set.tokens_.push_back(std::move(token));
    set.frequencies_.push_back(f);
  }
  set.BuildIndex();
  return set;
}

}  // namespace covertok
