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

#include "covertok/bpe.h"

#include <algorithm>
#include <limits>
#include <unordered_set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace covertok {

namespace {

// Symbols never exceed the marker, so this cannot collide with data.
constexpr Symbol kPairSeparator = 0xffff;

SymbolString PairKey(SymbolView left, SymbolView right) {
  SymbolString key;
  key.reserve(left.size() + right.size() + 1);
  key.append(left);
  key.push_back(kPairSeparator);
  key.append(right);
  return key;
}

uint64_t PackPair(uint32_t a, uint32_t b) {
  return (static_cast<uint64_t>(a) << 32) | b;
}

// Lexicographic comparison of l1+r1 against l2+r2 without allocating.
int CompareConcat(SymbolView l1, SymbolView r1, SymbolView l2, SymbolView r2) {
  auto at = [](SymbolView l, SymbolView r, size_t i) {
    return i < l.size() ? l[i] : r[i - l.size()];
  };
  const size_t n1 = l1.size() + r1.size();
  const size_t n2 = l2.size() + r2.size();
  for (size_t i = 0; i < std::min(n1, n2); ++i) {
    const Symbol a = at(l1, r1, i);
    const Symbol b = at(l2, r2, i);
    if (a != b) return a < b ? -1 : 1;
  }
  if (n1 == n2) return 0;
  return n1 < n2 ? -1 : 1;
}

}  // namespace

absl::StatusOr<MergeList> BpeTrain(std::span<const CountedWord> words,
                                   size_t k) {
  if (words.empty()) return absl::InvalidArgumentError("empty corpus");
  if (k == 0) return absl::InvalidArgumentError("invalid budget: k must be >= 1");

  // Interned token strings; identical strings share one id even when they
  // arise from different merges.
  std::vector<SymbolString> table;
  std::unordered_map<SymbolString, uint32_t> ids;
  auto intern = [&](SymbolString s) {
    auto [it, inserted] = ids.emplace(s, static_cast<uint32_t>(table.size()));
    if (inserted) table.push_back(std::move(s));
    return it->second;
  };

  std::vector<std::vector<uint32_t>> seqs(words.size());
  std::unordered_map<uint64_t, int64_t> pair_count;
  std::unordered_map<uint64_t, std::vector<uint32_t>> pair_words;
  for (size_t w = 0; w < words.size(); ++w) {
    for (Symbol s : words[w].word) seqs[w].push_back(intern(SymbolString(1, s)));
    const auto& seq = seqs[w];
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      const uint64_t key = PackPair(seq[i], seq[i + 1]);
      pair_count[key] += static_cast<int64_t>(words[w].count);
      auto& list = pair_words[key];
      if (list.empty() || list.back() != w) list.push_back(static_cast<uint32_t>(w));
    }
  }

  MergeList merges;
  std::vector<size_t> last_visit(words.size(), std::numeric_limits<size_t>::max());
  while (merges.size() < k) {
    uint64_t best_key = 0;
    int64_t best_count = 0;
    for (const auto& [key, count] : pair_count) {
      if (count <= 0) continue;
      if (count < best_count) continue;
      if (count == best_count) {
        const SymbolView l1 = table[key >> 32], r1 = table[key & 0xffffffff];
        const SymbolView l2 = table[best_key >> 32],
                         r2 = table[best_key & 0xffffffff];
        const int c = CompareConcat(l1, r1, l2, r2);
        if (c > 0 || (c == 0 && l1.size() >= l2.size())) continue;
      }
      best_key = key;
      best_count = count;
    }
    if (best_count == 0) break;

    const uint32_t left = static_cast<uint32_t>(best_key >> 32);
    const uint32_t right = static_cast<uint32_t>(best_key & 0xffffffff);
    merges.push_back({table[left], table[right]});
    const uint32_t merged = intern(table[left] + table[right]);

    const std::vector<uint32_t> affected = std::move(pair_words[best_key]);
    pair_words.erase(best_key);
    for (uint32_t w : affected) {
      if (last_visit[w] == merges.size()) continue;
      last_visit[w] = merges.size();
      auto& seq = seqs[w];
      const int64_t c = static_cast<int64_t>(words[w].count);
      bool present = false;
      for (size_t i = 0; i + 1 < seq.size() && !present; ++i) {
        present = seq[i] == left && seq[i + 1] == right;
      }
      if (!present) continue;
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        pair_count[PackPair(seq[i], seq[i + 1])] -= c;
      }
      std::vector<uint32_t> next;
      next.reserve(seq.size());
      for (size_t i = 0; i < seq.size();) {
        if (i + 1 < seq.size() && seq[i] == left && seq[i + 1] == right) {
          next.push_back(merged);
          i += 2;
        } else {
          next.push_back(seq[i]);
          ++i;
        }
      }
      seq = std::move(next);
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        const uint64_t key = PackPair(seq[i], seq[i + 1]);
        pair_count[key] += c;
        if (seq[i] == merged || seq[i + 1] == merged) {
          auto& list = pair_words[key];
          if (list.empty() || list.back() != w) list.push_back(w);
        }
      }
    }
    pair_count.erase(best_key);
    std::erase_if(pair_count, [](const auto& kv) { return kv.second <= 0; });
  }
  return merges;
}

std::vector<SymbolString> MergedTokens(const MergeList& merges) {
  std::vector<SymbolString> out;
  std::unordered_set<SymbolString> seen;
  for (const Merge& m : merges) {
    SymbolString t = m.merged();
    if (seen.insert(t).second) out.push_back(std::move(t));
  }
  return out;
}

BpeEncoder::BpeEncoder(const MergeList& merges) {
  for (size_t i = 0; i < merges.size(); ++i) {
    priority_.emplace(PairKey(merges[i].left, merges[i].right), i);
  }
}

std::vector<SymbolString> BpeEncoder::Encode(SymbolView word) const {
  std::vector<SymbolString> pieces;
  pieces.reserve(word.size());
  for (Symbol s : word) pieces.push_back(SymbolString(1, s));
  // Merging the lowest-priority pair present, everywhere, until none is left
  // is the same as applying the list in order: a merge can only create pairs
  // whose merges come later in the list.
  while (pieces.size() > 1) {
    size_t best = std::numeric_limits<size_t>::max();
    for (size_t i = 0; i + 1 < pieces.size(); ++i) {
      auto it = priority_.find(PairKey(pieces[i], pieces[i + 1]));
      if (it != priority_.end()) best = std::min(best, it->second);
    }
    if (best == std::numeric_limits<size_t>::max()) break;
    std::vector<SymbolString> next;
    next.reserve(pieces.size());
    for (size_t i = 0; i < pieces.size();) {
      if (i + 1 < pieces.size()) {
        auto it = priority_.find(PairKey(pieces[i], pieces[i + 1]));
        if (it != priority_.end() && it->second == best) {
          next.push_back(pieces[i] + pieces[i + 1]);
          i += 2;
          continue;
        }
      }
      next.push_back(std::move(pieces[i]));
      ++i;
    }
    pieces = std::move(next);
  }
  return pieces;
}

std::string SerializeMerges(const MergeList& merges) {
  std::string out;
  for (const Merge& m : merges) {
    absl::StrAppend(&out, ToHex(m.left), " ", ToHex(m.right), "\n");
  }
  return out;
}

absl::StatusOr<MergeList> ParseMerges(std::string_view text) {
  MergeList merges;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (line.empty()) continue;
    const size_t sp = line.find(' ');
    if (sp == std::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected '<left-hex> <right-hex>'"));
    }
    auto left = FromHex(line.substr(0, sp));
    auto right = FromHex(line.substr(sp + 1));
    if (!left.ok() || !right.ok() || left->empty() || right->empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": malformed merge"));
    }
    merges.push_back({*std::move(left), *std::move(right)});
  }
  return merges;
}

}  // namespace covertok
