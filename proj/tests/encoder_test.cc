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

#include "covertok/encoder.h"

#include <random>
#include <string>
#include <vector>

#include "covertok/cover.h"
#include "covertok/trainer.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace covertok {
namespace {

using testing::MakeVocab;
using testing::S;
using testing::ValueOrDie;

std::vector<std::string> Pieces(SymbolView word, const Vocabulary& v) {
  std::vector<std::string> out;
  for (TokenId id : EncodeWord(word, v)) out.push_back(ToBytes(*v.Symbols(id), "_"));
  return out;
}

TEST(EncodeWordTest, OverrideChainEndsInOneToken) {
  const Vocabulary v =
      MakeVocab({"ab", "cd", "ef", "abc", "abcd", "efg", "abcdefg"});
  EncodeStats stats;
  const std::vector<Rank> m = CoverWord(S("abcdefg"), v, &stats);
  EXPECT_EQ(m, std::vector<Rank>(6, 7));
  EXPECT_EQ(Pieces(S("abcdefg"), v), (std::vector<std::string>{"abcdefg"}));
  EXPECT_GT(stats.overrides, 0u);
  EXPECT_LE(stats.label_writes, 49u);
}

TEST(EncodeWordTest, LabelsDelineateOutput) {
  const Vocabulary v = MakeVocab({"bcd", "ef"});
  EXPECT_EQ(CoverWord(S("abcdef"), v), (std::vector<Rank>{0, 1, 1, 0, 2}));
  const std::vector<TokenId> ids = EncodeWord(S("abcdef"), v);
  EXPECT_EQ(ids, (std::vector<TokenId>{'a', 257, 258}));
  EXPECT_EQ(*Decode(ids, v), "abcdef");
}

TEST(EncodeWordTest, Papaya) {
  EXPECT_EQ(Pieces(S("papaya"), MakeVocab({"pa", "ya"})),
            (std::vector<std::string>{"pa", "pa", "ya"}));
}

TEST(EncodeWordTest, OverlappingRepeatCoveredOnce) {
  EXPECT_EQ(Pieces(S("ababa"), MakeVocab({"aba"})),
            (std::vector<std::string>{"aba", "b", "a"}));
}

TEST(EncodeWordTest, RankBeatsLength) {
  // ab is applied first and blocks the longer but lower-priority bcd.
  EXPECT_EQ(Pieces(S("abcd"), MakeVocab({"ab", "bcd"})),
            (std::vector<std::string>{"ab", "c", "d"}));
  EXPECT_EQ(EncodeWord(S("abcd"), MakeVocab({"ab", "bcd"}), EncodeMode::kOptimal),
            (std::vector<TokenId>{'a', 258}));
}

TEST(EncodeTextTest, MarkedScaredy) {
  const Vocabulary v = MakeVocab({"care", "edy"});
  for (EncodeMode mode : {EncodeMode::kGreedy, EncodeMode::kOptimal}) {
    EXPECT_EQ(EncodeText("scaredy", v, mode),
              (std::vector<TokenId>{kMarkerId, 's', 257, 'd', 'y'}));
  }
  EXPECT_TRUE(EncodeText("", v).empty());
}

TEST(DecodeTest, MarkerBecomesSpaceAfterStart) {
  SymbolString the = S("the"), cat = S("cat");
  the.insert(the.begin(), kMarker);
  cat.insert(cat.begin(), kMarker);
  const Vocabulary v = ValueOrDie(Vocabulary::FromTokens({the, cat}));
  EXPECT_EQ(*Decode(std::vector<TokenId>{257, 258}, v), "the cat");
  EXPECT_EQ(*Decode(std::vector<TokenId>{kMarkerId, 'a', kMarkerId, 'b'}, v), "a b");
  EXPECT_EQ(*Decode(std::vector<TokenId>{}, v), "");
}

TEST(DecodeTest, UnknownIdIsAnError) {
  const Vocabulary v = MakeVocab({"ab"});
  const auto r = Decode(std::vector<TokenId>{'a', 258}, v);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.status().message().find("invalid token id"), std::string::npos);
}

std::string RandomText(std::mt19937_64& rng, size_t max_len) {
  static const std::string kPool = std::string("  \t\n\r aabbab.") + '\0' +
                                   "\xff\xc3\x28\xe2\x82";
  std::string out(rng() % (max_len + 1), ' ');
  for (char& c : out) c = kPool[rng() % kPool.size()];
  return out;
}

TEST(RoundTripTest, FuzzedBytesBothModes) {
  std::mt19937_64 rng(19);
  const Corpus corpus = Ingest("ab ab aab ba b.a \xff\xff ab.");
  const CandidateSet cands = ValueOrDie(ExtractCandidates(corpus.words()));
  const Vocabulary v = ValueOrDie(SelectTokens(corpus.words(), cands, 8)).vocabulary;
  ASSERT_GT(v.size(), 0u);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string text = RandomText(rng, 60);
    const std::vector<TokenId> greedy = EncodeText(text, v, EncodeMode::kGreedy);
    const std::vector<TokenId> optimal = EncodeText(text, v, EncodeMode::kOptimal);
    EXPECT_EQ(*Decode(greedy, v), NormalizeWhitespace(text));
    EXPECT_EQ(*Decode(optimal, v), NormalizeWhitespace(text));
    EXPECT_LE(optimal.size(), greedy.size());
    for (TokenId id : greedy) EXPECT_LT(id, v.id_count());
  }
}

TEST(EncodeWordTest, OptimalModeMatchesPartition) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<SymbolString> tokens;
    for (int i = 0; i < 5; ++i) {
      SymbolString t = testing::RandomWord(rng, "abc", 2, 4);
      if (std::find(tokens.begin(), tokens.end(), t) == tokens.end()) tokens.push_back(t);
    }
    const Vocabulary v = ValueOrDie(Vocabulary::FromTokens(tokens));
    const SymbolString w = testing::RandomWord(rng, "abc", 1, 16);
    EncodeStats stats;
    const auto greedy = EncodeWord(w, v, EncodeMode::kGreedy, &stats);
    const auto optimal = EncodeWord(w, v, EncodeMode::kOptimal);
    EXPECT_EQ(optimal.size(), PartitionDp(w, v).token_count);
    EXPECT_LE(optimal.size(), greedy.size());
    EXPECT_LE(stats.label_writes, w.size() * w.size());
    EXPECT_TRUE(ValidateCover(w, CoverWord(w, v), v).ok());
    SymbolString joined;
    for (TokenId id : greedy) joined += *v.Symbols(id);
    EXPECT_EQ(joined, w);
  }
}

TEST(EncodeWordTest, ReproducesTrainingState) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto words = testing::RandomWords(rng, 8, "abc", 2, 12);
    const CandidateSet cands = ValueOrDie(ExtractCandidates(words, {.min_freq = 1}));
    const TrainResult r = ValueOrDie(SelectTokens(words, cands, 5));
    for (size_t w = 0; w < words.size(); ++w) {
      const auto trained = r.state.labels(w);
      EXPECT_EQ(CoverWord(words[w].word, r.vocabulary),
                std::vector<Rank>(trained.begin(), trained.end()));
    }
  }
}

TEST(IdStreamTest, RoundTripsBothFormats) {
  const std::vector<TokenId> ids = {0, 256, 257, 70000};
  EXPECT_EQ(SerializeIds(ids, IdFormat::kDecimal), "0\n256\n257\n70000\n");
  for (IdFormat f : {IdFormat::kDecimal, IdFormat::kBinary}) {
    EXPECT_EQ(*ParseIds(SerializeIds(ids, f), f), ids);
  }
  const std::string bin = SerializeIds(ids, IdFormat::kBinary);
  EXPECT_EQ(bin.size(), 20u);
  EXPECT_EQ(bin.substr(0, 4), std::string("\x04\x00\x00\x00", 4));
}

TEST(IdStreamTest, RejectsMalformedStreams) {
  EXPECT_FALSE(ParseIds("12\nx\n", IdFormat::kDecimal).ok());
  EXPECT_FALSE(ParseIds("-1\n", IdFormat::kDecimal).ok());
  EXPECT_FALSE(ParseIds(std::string("\x02\x00\x00\x00\x01\x00\x00\x00", 8),
                        IdFormat::kBinary)
                   .ok());
  EXPECT_FALSE(ParseIds("ab", IdFormat::kBinary).ok());
}

}  // namespace
}  // namespace covertok
