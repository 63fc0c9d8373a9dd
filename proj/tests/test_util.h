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

#ifndef COVERTOK_TESTS_TEST_UTIL_H_
#define COVERTOK_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/corpus.h"
#include "covertok/symbols.h"
#include "covertok/vocabulary.h"
#include "gtest/gtest.h"

namespace covertok::testing {

inline SymbolString S(std::string_view bytes) { return FromBytes(bytes); }

template <typename T>
T ValueOrDie(absl::StatusOr<T> v) {
  EXPECT_TRUE(v.ok()) << v.status();
  if (!v.ok()) std::abort();
  return *std::move(v);
}

inline std::vector<CountedWord> Words(
    std::initializer_list<std::pair<std::string_view, uint64_t>> entries) {
  std::vector<CountedWord> out;
  for (const auto& [w, c] : entries) out.push_back({S(w), c});
  return out;
}

inline Corpus MakeCorpus(
    std::initializer_list<std::pair<std::string_view, uint64_t>> entries) {
  return ValueOrDie(Corpus::FromEntries(Words(entries)));
}

inline std::vector<SymbolString> Tokens(
    std::initializer_list<std::string_view> tokens) {
  std::vector<SymbolString> out;
  for (std::string_view t : tokens) out.push_back(S(t));
  return out;
}

inline Vocabulary MakeVocab(std::initializer_list<std::string_view> tokens) {
  return ValueOrDie(Vocabulary::FromTokens(Tokens(tokens)));
}

inline std::vector<std::string> Strings(const std::vector<SymbolView>& pieces) {
  std::vector<std::string> out;
  for (SymbolView p : pieces) out.push_back(ToBytes(p, "_"));
  return out;
}

// The worked example with four words and two extra candidates.
inline std::vector<CountedWord> RandWords() {
  return Words({{"random", 1}, {"randose", 1}, {"rosey", 1}, {"randy", 1}});
}
inline std::vector<SymbolString> RandCandidates() {
  return Tokens({"rand", "random", "randose", "randy", "ose", "rosey"});
}

inline SymbolString RandomWord(std::mt19937_64& rng, std::string_view alphabet,
                               size_t min_len, size_t max_len) {
  std::uniform_int_distribution<size_t> len(min_len, max_len);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  SymbolString w(len(rng), 0);
  for (Symbol& s : w) s = static_cast<unsigned char>(alphabet[pick(rng)]);
  return w;
}

// Distinct random words with random counts, sorted.
inline std::vector<CountedWord> RandomWords(std::mt19937_64& rng,
                                            size_t max_words,
                                            std::string_view alphabet,
                                            size_t min_len, size_t max_len,
                                            uint64_t max_count = 3) {
  std::uniform_int_distribution<size_t> n(1, max_words);
  std::uniform_int_distribution<uint64_t> count(1, max_count);
  std::vector<CountedWord> entries;
  const size_t want = n(rng);
  for (size_t tries = 0; entries.size() < want && tries < 100; ++tries) {
    SymbolString w = RandomWord(rng, alphabet, min_len, max_len);
    bool dup = false;
    for (const CountedWord& e : entries) dup |= e.word == w;
    if (!dup) entries.push_back({std::move(w), count(rng)});
  }
  const Corpus corpus = ValueOrDie(Corpus::FromEntries(std::move(entries)));
  return {corpus.words().begin(), corpus.words().end()};
}

}  // namespace covertok::testing

#endif  // COVERTOK_TESTS_TEST_UTIL_H_
