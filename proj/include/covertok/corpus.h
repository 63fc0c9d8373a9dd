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

#ifndef COVERTOK_CORPUS_H_
#define COVERTOK_CORPUS_H_

// Word-count corpora and candidate token extraction.
//
// A corpus is a set of distinct words, each with a positive count. Text is
// split on runs of ASCII whitespace (space, tab, LF, CR) and every word is
// prefixed with the word-start marker, including the first word of a stream.
// This makes decoding unambiguous: the marker renders as one space except at
// the start of the stream.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/symbols.h"

namespace covertok {

struct CountedWord {
  SymbolString word;
  uint64_t count = 0;

  friend bool operator==(const CountedWord&, const CountedWord&) = default;
};

class Corpus {
 public:
  Corpus() = default;

  // Validates and canonicalizes (sorts) `entries`. Fails on empty words,
  // zero counts, duplicate words and markers past position 0.
  static absl::StatusOr<Corpus> FromEntries(std::vector<CountedWord> entries);

  // Words in ascending symbol order.
  std::span<const CountedWord> words() const { return words_; }
  size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  // Sum of counts.
  uint64_t total_words() const { return total_words_; }
  // Sum of count * |W|.
  uint64_t total_symbols() const { return total_symbols_; }

  std::optional<uint64_t> count(SymbolView word) const;

 private:
  std::vector<CountedWord> words_;
  uint64_t total_words_ = 0;
  uint64_t total_symbols_ = 0;
};

// Splits `text` into marker-prefixed words, in stream order.
std::vector<SymbolString> SplitWords(std::string_view text);

// Collapses whitespace runs to one space and trims both ends. This is the
// image of decode(encode(text)).
std::string NormalizeWhitespace(std::string_view text);

Corpus Ingest(std::string_view text);

// Word-count TSV: `<lowercase-hex word>\t<decimal count>\n` per line.
absl::StatusOr<Corpus> ParseWordCounts(std::string_view tsv);
std::string FormatWordCounts(const Corpus& corpus);

struct CandidateOptions {
  size_t max_len = 64;
  uint64_t min_freq = 2;
};

// The candidate universe T: distinct multi-symbol substrings of corpus words,
// sorted ascending. Index order is therefore lexicographic order, which the
// trainers use for tie-breaking.
class CandidateSet {
 public:
  CandidateSet() = default;

  // Builds a set from explicit tokens. Each token must have length >= 2 and
  // occur in some word of `words`.
  static absl::StatusOr<CandidateSet> FromTokens(
      std::span<const CountedWord> words, std::vector<SymbolString> tokens);

  size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const SymbolString& token(size_t i) const { return tokens_[i]; }
  std::span<const SymbolString> tokens() const { return tokens_; }
  // Sum over words of count(W) times the number of occurrences in W.
  uint64_t frequency(size_t i) const { return frequencies_[i]; }
  size_t max_length() const { return max_length_; }
  std::optional<size_t> IndexOf(SymbolView token) const;

 private:
  friend absl::StatusOr<CandidateSet> ExtractCandidates(
      std::span<const CountedWord>, const CandidateOptions&);

  void BuildIndex();

  std::vector<SymbolString> tokens_;
  std::vector<uint64_t> frequencies_;
  std::unordered_map<SymbolString, size_t, SymbolHash, std::equal_to<>>
      index_;
  size_t max_length_ = 0;
};

absl::StatusOr<CandidateSet> ExtractCandidates(
    std::span<const CountedWord> words, const CandidateOptions& options = {});

}  // namespace covertok

#endif  // COVERTOK_CORPUS_H_
