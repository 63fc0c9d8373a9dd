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

#include <algorithm>
#include <charconv>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace covertok {

namespace {
constexpr std::string_view kVocabMagic = "GREEDTOK-VOCAB v1";
}  // namespace

absl::StatusOr<Vocabulary> Vocabulary::FromTokens(
    std::vector<SymbolString> selected) {
  Vocabulary vocab;
  vocab.ranks_.reserve(selected.size());
  for (size_t i = 0; i < selected.size(); ++i) {
    const SymbolString& t = selected[i];
    if (t.size() < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("selected token is not multi-symbol: ", ToDisplay(t)));
    }
    if (!vocab.ranks_.emplace(t, static_cast<Rank>(i + 1)).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate selected token: ", ToDisplay(t)));
    }
    vocab.max_token_length_ = std::max(vocab.max_token_length_, t.size());
  }
  vocab.selected_ = std::move(selected);
  return vocab;
}

std::optional<Rank> Vocabulary::RankOf(SymbolView token) const {
  auto it = ranks_.find(token);
  if (it == ranks_.end()) return std::nullopt;
  return it->second;
}

absl::StatusOr<SymbolView> Vocabulary::Symbols(TokenId id) const {
  static const auto* const kSingletons = [] {
    auto* v = new std::vector<SymbolString>;
    for (int s = 0; s < kAlphabetSize; ++s) {
      v->push_back(SymbolString(1, static_cast<Symbol>(s)));
    }
    return v;
  }();
  if (id < static_cast<TokenId>(kAlphabetSize)) return SymbolView((*kSingletons)[id]);
  const size_t rank = id - kMarkerId;
  if (rank > selected_.size()) {
    return absl::OutOfRangeError(absl::StrCat("invalid token id ", id));
  }
  return SymbolView(selected_[rank - 1]);
}

std::string SerializeVocabulary(const Vocabulary& vocab) {
  std::string out = absl::StrCat(std::string(kVocabMagic), "\nk=", vocab.size(), "\n");
  for (const SymbolString& t : vocab.selected()) {
    absl::StrAppend(&out, ToHex(t), "\n");
  }
  return out;
}

absl::StatusOr<Vocabulary> ParseVocabulary(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  if (lines.size() < 2 || lines[0] != kVocabMagic) {
    return absl::InvalidArgumentError("missing GREEDTOK-VOCAB v1 header");
  }
  std::string_view k_line = lines[1];
  if (k_line.substr(0, 2) != "k=") {
    return absl::InvalidArgumentError("expected k=<decimal> on line 2");
  }
  k_line.remove_prefix(2);
  size_t k = 0;
  auto [ptr, ec] = std::from_chars(k_line.data(), k_line.data() + k_line.size(), k);
  if (ec != std::errc() || ptr != k_line.data() + k_line.size() ||
      k_line.empty()) {
    return absl::InvalidArgumentError("malformed k= line");
  }
  if (lines.size() != k + 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("k=", k, " but ", lines.size() - 2, " token lines"));
  }
  std::vector<SymbolString> tokens;
  tokens.reserve(k);
  for (size_t i = 2; i < lines.size(); ++i) {
    auto t = FromHex(lines[i]);
    if (!t.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", i + 1, ": ", t.status().message()));
    }
    tokens.push_back(*std::move(t));
  }
  return Vocabulary::FromTokens(std::move(tokens));
}

}  // namespace covertok
