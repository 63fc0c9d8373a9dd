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

#include <algorithm>
#include <cassert>
#include <charconv>
#include <tuple>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "covertok/corpus.h"
#include "covertok/cover.h"

namespace covertok {

std::vector<Rank> CoverWord(SymbolView word, const Vocabulary& vocab,
                            EncodeStats* stats) {
  std::vector<Rank> labels(word.empty() ? 0 : word.size() - 1, 0);
  if (word.size() < 2 || vocab.empty()) return labels;

  struct Hit {
    Rank rank;
    uint32_t start;
    uint32_t length;
  };
  std::vector<Hit> hits;
  const size_t max_len = vocab.max_token_length();
  for (size_t i = 0; i + 2 <= word.size(); ++i) {
    const size_t longest = std::min(max_len, word.size() - i);
    for (size_t len = 2; len <= longest; ++len) {
      if (auto r = vocab.RankOf(word.substr(i, len))) {
        hits.push_back({*r, static_cast<uint32_t>(i), static_cast<uint32_t>(len)});
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return std::tie(a.rank, a.start) < std::tie(b.rank, b.start);
  });

  for (const Hit& h : hits) {
    if (!CanCoverAt(labels, h.start, h.length)) continue;
    for (size_t j = h.start; j + 1 < h.start + h.length; ++j) {
      if (labels[j] != 0) {
        // Only a strictly longer token enclosing the old cover gets here.
        assert(vocab.token(labels[j]).size() < h.length);
        if (stats) ++stats->overrides;
      }
      labels[j] = h.rank;
      if (stats) ++stats->label_writes;
    }
  }
  return labels;
}

namespace {

void AppendSegments(SymbolView word, const Segmentation& seg,
                    std::span<const Rank> labels, const Vocabulary& vocab,
                    std::vector<TokenId>& out) {
  for (size_t i = 0; i + 1 < seg.boundaries.size(); ++i) {
    const size_t begin = seg.boundaries[i];
    const size_t len = seg.boundaries[i + 1] - begin;
    if (len == 1) {
      out.push_back(Vocabulary::IdOfSymbol(word[begin]));
    } else if (!labels.empty()) {
      out.push_back(Vocabulary::IdOfRank(labels[begin]));
    } else {
      out.push_back(Vocabulary::IdOfRank(*vocab.RankOf(word.substr(begin, len))));
    }
  }
}

}  // namespace

std::vector<TokenId> EncodeWord(SymbolView word, const Vocabulary& vocab,
                                EncodeMode mode, EncodeStats* stats) {
  std::vector<TokenId> out;
  if (word.empty()) return out;
  if (mode == EncodeMode::kOptimal) {
    AppendSegments(word, PartitionDp(word, vocab).segmentation, {}, vocab, out);
    return out;
  }
  const std::vector<Rank> labels = CoverWord(word, vocab, stats);
  AppendSegments(word, SegmentationFromLabels(labels), labels, vocab, out);
  return out;
}

std::vector<TokenId> EncodeText(std::string_view text, const Vocabulary& vocab,
                                EncodeMode mode) {
  std::vector<TokenId> out;
  for (const SymbolString& w : SplitWords(text)) {
    std::vector<TokenId> ids = EncodeWord(w, vocab, mode);
    out.insert(out.end(), ids.begin(), ids.end());
  }
  return out;
}

absl::StatusOr<std::string> Decode(std::span<const TokenId> ids,
                                   const Vocabulary& vocab) {
  std::string out;
  bool at_start = true;
  for (TokenId id : ids) {
    absl::StatusOr<SymbolView> symbols = vocab.Symbols(id);
    if (!symbols.ok()) {
      return absl::InvalidArgumentError(absl::StrCat("invalid token id ", id));
    }
    for (Symbol s : *symbols) {
      if (s == kMarker) {
        if (!at_start) out.push_back(' ');
      } else {
        out.push_back(static_cast<char>(static_cast<unsigned char>(s)));
      }
      at_start = false;
    }
  }
  return out;
}

std::string SerializeIds(std::span<const TokenId> ids, IdFormat format) {
  std::string out;
  if (format == IdFormat::kDecimal) {
    for (TokenId id : ids) absl::StrAppend(&out, id, "\n");
    return out;
  }
  auto put32 = [&out](uint32_t v) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  out.reserve(4 * (ids.size() + 1));
  put32(static_cast<uint32_t>(ids.size()));
  for (TokenId id : ids) put32(id);
  return out;
}

absl::StatusOr<std::vector<TokenId>> ParseIds(std::string_view data,
                                              IdFormat format) {
  std::vector<TokenId> ids;
  if (format == IdFormat::kBinary) {
    auto get32 = [&data](size_t at) {
      uint32_t v = 0;
      for (int b = 0; b < 4; ++b) {
        v |= static_cast<uint32_t>(static_cast<unsigned char>(data[at + b])) << (8 * b);
      }
      return v;
    };
    if (data.size() < 4) return absl::InvalidArgumentError("truncated id stream");
    const uint32_t n = get32(0);
    if (data.size() != 4 + 4 * static_cast<size_t>(n)) {
      return absl::InvalidArgumentError(
          absl::StrCat("id stream declares ", n, " ids but holds ",
                       (data.size() - 4) / 4));
    }
    ids.reserve(n);
    for (uint32_t i = 0; i < n; ++i) ids.push_back(get32(4 + 4 * i));
    return ids;
  }
  size_t line_no = 0;
  while (!data.empty()) {
    ++line_no;
    const size_t eol = data.find('\n');
    std::string_view line = data.substr(0, eol);
    data.remove_prefix(eol == std::string_view::npos ? data.size() : eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    TokenId id = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), id);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": not a token id: '", std::string(line), "'"));
    }
    ids.push_back(id);
  }
  return ids;
}

}  // namespace covertok
