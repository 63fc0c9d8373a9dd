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

#include "covertok/oracle.h"

#include <random>
#include <string>
#include <vector>

#include "covertok/trainer.h"
#include "covertok/wmc.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace covertok {
namespace {

using testing::S;
using testing::Tokens;
using testing::ValueOrDie;
using testing::Words;

TEST(BruteForceTokTest, WorkedExampleAtTwoTokens) {
  const auto words = testing::RandWords();
  const auto cands = Tokens({"ose", "rand", "random", "randose", "randy", "rosey"});
  const BruteForceResult r = ValueOrDie(BruteForceTok(words, cands, 2));
  EXPECT_EQ(r.partitions, 10u);
  EXPECT_EQ(r.objective, 13u);
  EXPECT_EQ(r.chosen, (std::vector<size_t>{0, 1}));
}

TEST(BruteForceTokTest, EmptyBudget) {
  const auto words = testing::RandWords();
  const BruteForceResult r = ValueOrDie(BruteForceTok(words, testing::RandCandidates(), 0));
  EXPECT_EQ(r.objective, 0u);
  EXPECT_EQ(r.partitions, 23u);
  EXPECT_TRUE(r.chosen.empty());
}

TEST(BruteForceTokTest, ScaredyPartitions) {
  const auto words = Words({{"scaredy", 1}});
  auto partitions = [&](std::initializer_list<std::string_view> t) {
    return ValueOrDie(BruteForceTok(words, Tokens(t), t.size())).partitions;
  };
  EXPECT_EQ(partitions({"care"}), 4u);
  EXPECT_EQ(partitions({"care", "edy"}), 4u);
  EXPECT_EQ(partitions({"care", "edy", "scar"}), 2u);
  EXPECT_EQ(partitions({"care", "scared"}), 2u);
  EXPECT_EQ(partitions({"care", "dy"}), 3u);
}

TEST(BruteForceTokTest, GuardRails) {
  const auto words = Words({{"ab", 1}});
  std::vector<SymbolString> many;
  for (int i = 0; i < 21; ++i) many.push_back(S("x") + S(std::string(1, 'a' + i)));
  auto r = BruteForceTok(words, many, 1);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.status().message(), "oracle limit exceeded");
  many.pop_back();
  EXPECT_TRUE(BruteForceTok(words, many, 5).ok());
  EXPECT_FALSE(BruteForceTok(words, many, 6).ok());
}

TEST(CountSubsetsTest, SmallValues) {
  EXPECT_EQ(CountSubsets(20, 5), kOracleSubsetLimit);
  EXPECT_EQ(CountSubsets(8, 8), 256u);
  EXPECT_EQ(CountSubsets(8, 100), 256u);
  EXPECT_EQ(CountSubsets(3, 0), 1u);
}

TEST(BruteForceTokTest, GreedyNeverBeatsOptimum) {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto words = testing::RandomWords(rng, 6, "abc", 2, 8);
    const CandidateSet cands =
        ValueOrDie(ExtractCandidates(words, {.max_len = 8, .min_freq = 2}));
    if (cands.empty() || cands.size() > kOracleMaxCandidates) continue;
    const size_t k = 1 + rng() % 3;
    const auto best = BruteForceTok(words, cands.tokens(), k);
    if (!best.ok()) continue;
    const TrainResult greedy = ValueOrDie(SelectTokens(words, cands, k));
    EXPECT_LE(greedy.objective, best->objective);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(BruteForceTokTest, RelaxationDominates) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const auto words = testing::RandomWords(rng, 5, "abc", 2, 7);
    const CandidateSet all =
        ValueOrDie(ExtractCandidates(words, {.max_len = 4, .min_freq = 1}));
    std::vector<SymbolString> picked(all.tokens().begin(), all.tokens().end());
    std::shuffle(picked.begin(), picked.end(), rng);
    picked.resize(std::min<size_t>(picked.size(), 8));
    const CandidateSet cands = ValueOrDie(CandidateSet::FromTokens(words, picked));
    const WmcInstance inst = BuildWmc(words, cands);
    std::vector<uint64_t> weights;
    for (size_t e = 0; e < inst.num_elements(); ++e) weights.push_back(inst.weight(e));
    std::vector<std::vector<uint32_t>> sets;
    for (size_t s = 0; s < inst.num_sets(); ++s) {
      sets.emplace_back(inst.set(s).begin(), inst.set(s).end());
    }
    for (size_t k = 1; k <= 3; ++k) {
      const uint64_t tok = ValueOrDie(BruteForceTok(words, cands.tokens(), k)).objective;
      EXPECT_GE(testing::BruteForceWmc(weights, sets, k), tok);
    }
  }
}

}  // namespace
}  // namespace covertok
