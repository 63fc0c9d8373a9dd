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

#include "covertok/vocabulary.h"

#include <string>

#include "gtest/gtest.h"
#include "test_util.h"

namespace covertok {
namespace {

using testing::MakeVocab;
using testing::S;
using testing::ValueOrDie;

TEST(VocabularyTest, RanksFollowInsertionOrder) {
  const Vocabulary v = MakeVocab({"rand", "ose"});
  EXPECT_EQ(v.RankOf(S("rand")), 1u);
  EXPECT_EQ(v.RankOf(S("ose")), 2u);
  EXPECT_FALSE(v.RankOf(S("os")).has_value());
  EXPECT_EQ(v.max_token_length(), 4u);
  EXPECT_EQ(v.id_count(), 259u);
}

TEST(VocabularyTest, RejectsSingletonsAndDuplicates) {
  EXPECT_FALSE(Vocabulary::FromTokens(testing::Tokens({"a"})).ok());
  EXPECT_FALSE(Vocabulary::FromTokens(testing::Tokens({"ab", "ab"})).ok());
}

TEST(VocabularyTest, IdsCoverBytesMarkerAndTokens) {
  const Vocabulary v = MakeVocab({"ab"});
  EXPECT_EQ(*v.Symbols(97), S("a"));
  EXPECT_EQ(*v.Symbols(kMarkerId), SymbolString(1, kMarker));
  EXPECT_EQ(*v.Symbols(257), S("ab"));
  EXPECT_FALSE(v.Symbols(258).ok());
}

TEST(VocabularyTest, SerializesExactly) {
  SymbolString marked = S("the");
  marked.insert(marked.begin(), kMarker);
  const Vocabulary v =
      ValueOrDie(Vocabulary::FromTokens({S("rand"), marked}));
  const std::string text = SerializeVocabulary(v);
  EXPECT_EQ(text, "GREEDTOK-VOCAB v1\nk=2\n72616e64\n_746865\n");
  EXPECT_EQ(SerializeVocabulary(ValueOrDie(ParseVocabulary(text))), text);
}

TEST(VocabularyTest, EmptyVocabularyRoundTrips) {
  const std::string text = SerializeVocabulary(Vocabulary());
  EXPECT_EQ(text, "GREEDTOK-VOCAB v1\nk=0\n");
  EXPECT_TRUE(ValueOrDie(ParseVocabulary(text)).empty());
}

TEST(VocabularyTest, ParseRejectsMalformedFiles) {
  EXPECT_FALSE(ParseVocabulary("").ok());
  EXPECT_FALSE(ParseVocabulary("GREEDTOK-VOCAB v2\nk=0\n").ok());
  EXPECT_FALSE(ParseVocabulary("GREEDTOK-VOCAB v1\nk=x\n").ok());
  EXPECT_FALSE(ParseVocabulary("GREEDTOK-VOCAB v1\nk=2\n6162\n").ok());
  EXPECT_FALSE(ParseVocabulary("GREEDTOK-VOCAB v1\nk=1\n61\n").ok());
  EXPECT_FALSE(ParseVocabulary("GREEDTOK-VOCAB v1\nk=1\n6g62\n").ok());
}

}  // namespace
}  // namespace covertok
