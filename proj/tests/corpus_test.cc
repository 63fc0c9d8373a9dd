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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace covertok {
namespace {

using testing::S;
using testing::ValueOrDie;
using testing::Words;

SymbolString Marked(std::string_view bytes) {
  SymbolString s = S(bytes);
  s.insert(s.begin(), kMarker);
  return s;
}

TEST(IngestTest, CountsMarkedWords) {
  const Corpus c = Ingest("the cat the");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.count(Marked("the")), 2u);
  EXPECT_EQ(c.count(Marked("cat")), 1u);
  EXPECT_EQ(c.total_words(), 3u);
  EXPECT_EQ(c.total_symbols(), 12u);
}

TEST(IngestTest, EmptyInputGivesEmptyCorpus) {
  EXPECT_TRUE(Ingest("").empty());
  EXPECT_TRUE(Ingest(" \t\r\n ").empty());
  EXPECT_EQ(Ingest("").total_words(), 0u);
}

TEST(IngestTest, FirstWordIsMarkedToo) {
  const auto words = SplitWords("  a\tbb\r\n");
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[0], Marked("a"));
  EXPECT_EQ(words[1], Marked("bb"));
}

TEST(IngestTest, ArbitraryBytesSurvive) {
  const std::string text("\xff\xfe\x00z", 4);
  const auto words = SplitWords(text);
  ASSERT_EQ(words.size(), 1u);
  EXPECT_EQ(words[0].size(), 5u);
  EXPECT_EQ(words[0][3], 0);
}

TEST(NormalizeWhitespaceTest, CollapsesAndTrims) {
  EXPECT_EQ(NormalizeWhitespace("  a \t\n b  "), "a b");
  EXPECT_EQ(NormalizeWhitespace(""), "");
}

TEST(CorpusTest, RejectsInvalidEntries) {
  EXPECT_FALSE(Corpus::FromEntries({{S("a"), 0}}).ok());
  EXPECT_FALSE(Corpus::FromEntries({{S(""), 1}}).ok());
  EXPECT_FALSE(Corpus::FromEntries({{S("a"), 1}, {S("a"), 2}}).ok());
  SymbolString bad = S("ab");
  bad.push_back(kMarker);
  EXPECT_FALSE(Corpus::FromEntries({{bad, 1}}).ok());
}

TEST(WordCountsTest, RoundTrips) {
  const Corpus c = Ingest("to be or not to be");
  const std::string tsv = FormatWordCounts(c);
  const Corpus back = ValueOrDie(ParseWordCounts(tsv));
  EXPECT_EQ(FormatWordCounts(back), tsv);
  EXPECT_EQ(back.total_words(), 6u);
}

TEST(WordCountsTest, AcceptsUnmarkedWords) {
  const Corpus c = ValueOrDie(ParseWordCounts(
      "72616e646f6d\t1\n72616e646f7365\t1\n726f736579\t1\n72616e6479\t1\n"));
  EXPECT_EQ(c.size(), 4u);
  for (const CountedWord& w : c.words()) EXPECT_EQ(w.count, 1u);
}

TEST(WordCountsTest, RejectsMalformedLines) {
  EXPECT_FALSE(ParseWordCounts("6162\n").ok());
  EXPECT_FALSE(ParseWordCounts("6162\tx\n").ok());
  EXPECT_FALSE(ParseWordCounts("zz\t1\n").ok());
  EXPECT_FALSE(ParseWordCounts("6162\t1\n6162\t2\n").ok());
}

TEST(CandidatesTest, SingleDoubledLetter) {
  const auto words = Words({{"aa", 1}});
  const CandidateSet c = ValueOrDie(ExtractCandidates(words, {.min_freq = 1}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.token(0), S("aa"));
  EXPECT_EQ(c.frequency(0), 1u);
}

TEST(CandidatesTest, ClosureContainsWorkedExampleTokens) {
  const auto words = testing::RandWords();
  const CandidateSet c = ValueOrDie(ExtractCandidates(words, {.min_freq = 1}));
  for (const SymbolString& t : testing::RandCandidates()) {
    EXPECT_TRUE(c.IndexOf(t).has_value()) << ToDisplay(t);
  }
}

TEST(CandidatesTest, FrequencyIsCountWeighted) {
  const auto words = Words({{"ababa", 2}});
  const CandidateSet c = ValueOrDie(ExtractCandidates(words, {.min_freq = 3}));
  ASSERT_TRUE(c.IndexOf(S("ab")).has_value());
  EXPECT_EQ(c.frequency(*c.IndexOf(S("ab"))), 4u);
  EXPECT_FALSE(c.IndexOf(S("abab")).has_value());
}

TEST(CandidatesTest, EmptyCorpusIsAnError) {
  const auto r = ExtractCandidates({}, {});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.status().message(), "empty corpus");
}

TEST(CandidatesTest, MatchesBruteForceEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto words = testing::RandomWords(rng, 8, "abcd", 1, 12, 4);
    const size_t max_len = 2 + trial % 6;
    const uint64_t min_freq = 1 + trial % 3;
    const auto want = testing::NaiveSubstrings(words, max_len, min_freq);
    const CandidateSet got = ValueOrDie(
        ExtractCandidates(words, {.max_len = max_len, .min_freq = min_freq}));
    ASSERT_EQ(got.size(), want.size());
    size_t i = 0;
    for (const auto& [token, f] : want) {
      EXPECT_EQ(got.token(i), token);
      EXPECT_EQ(got.frequency(i), f);
      ++i;
    }
  }
}

TEST(CandidatesTest, FromTokensValidates) {
  const auto words = Words({{"abc", 1}});
  EXPECT_FALSE(CandidateSet::FromTokens(words, testing::Tokens({"a"})).ok());
  EXPECT_FALSE(CandidateSet::FromTokens(words, testing::Tokens({"ca"})).ok());
  const CandidateSet c = ValueOrDie(
      CandidateSet::FromTokens(words, testing::Tokens({"bc", "ab", "bc"})));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.token(0), S("ab"));
  EXPECT_EQ(c.max_length(), 2u);
}

}  // namespace
}  // namespace covertok
