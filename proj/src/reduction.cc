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

#include "covertok/reduction.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "covertok/oracle.h"

namespace covertok {

absl::StatusOr<Graph> MakeGraph(
    size_t n, std::vector<std::pair<uint32_t, uint32_t>> edges) {
  if (n >= kMarker) {
    return absl::InvalidArgumentError("too many vertices for the alphabet");
  }
  std::set<std::pair<uint32_t, uint32_t>> seen;
  for (auto& [i, j] : edges) {
    if (i < 1 || j < 1 || i > n || j > n) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", i, " ", j, ": vertex out of range"));
    }
    if (i == j) return absl::InvalidArgumentError(absl::StrCat("self-loop at ", i));
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate edge ", i, " ", j));
    }
  }
  return Graph{n, std::move(edges)};
}

absl::StatusOr<Graph> ParseGraph(std::string_view text) {
  std::vector<std::vector<uint32_t>> rows;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    std::vector<uint32_t> row;
    size_t at = 0;
    while (true) {
      at = line.find_first_not_of(" \t\r", at);
      if (at == std::string_view::npos) break;
      size_t stop = line.find_first_of(" \t\r", at);
      if (stop == std::string_view::npos) stop = line.size();
      const std::string_view field = line.substr(at, stop - at);
      at = stop;
      uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_no, ": not an integer: '", std::string(field), "'"));
      }
      row.push_back(v);
    }
    if (row.empty()) continue;
    const size_t want = rows.empty() ? 1 : 2;
    if (row.size() != want) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, rows.empty() ? ": expected vertex count"
                                         : ": expected 'i j'"));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return absl::InvalidArgumentError("missing vertex count");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (size_t r = 1; r < rows.size(); ++r) edges.push_back({rows[r][0], rows[r][1]});
  return MakeGraph(rows[0][0], std::move(edges));
}

TokInstance GraphToTok(const Graph& graph) {
  constexpr Symbol at = kSeparatorSymbol;
  TokInstance instance;
  instance.alphabet_size = graph.n + 1;
  for (const auto& [i, j] : graph.edges) {
    instance.words.push_back(
        {SymbolString{at, static_cast<Symbol>(i), at, static_cast<Symbol>(j), at},
         1});
  }
  for (size_t v = 1; v <= graph.n; ++v) {
    instance.candidates.push_back(SymbolString{at, static_cast<Symbol>(v), at});
  }
  instance.threshold = 3 * graph.edges.size();
  return instance;
}

std::string FormatTokInstance(const TokInstance& instance) {
  auto render = [](SymbolView s) {
    std::string out;
    for (Symbol c : s) {
      if (!out.empty()) out.push_back(' ');
      absl::StrAppend(&out, c == kSeparatorSymbol ? std::string("@")
                                                  : absl::StrCat("V", c));
    }
    return out;
  };
  std::string out = absl::StrCat("alphabet: ", instance.alphabet_size,
                                 " symbols\nwords:\n");
  for (const CountedWord& w : instance.words) {
    absl::StrAppend(&out, "  ", render(w.word), "\n");
  }
  absl::StrAppend(&out, "candidates:\n");
  for (const SymbolString& c : instance.candidates) {
    absl::StrAppend(&out, "  ", render(c), "\n");
  }
  absl::StrAppend(&out, "threshold: ", instance.threshold, "\n");
  return out;
}

bool HasVertexCover(const Graph& graph, size_t k) {
  const uint32_t n = static_cast<uint32_t>(graph.n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    if (static_cast<size_t>(__builtin_popcountll(mask)) > k) continue;
    bool covers = true;
    for (const auto& [i, j] : graph.edges) {
      if (!((mask >> (i - 1)) & 1) && !((mask >> (j - 1)) & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) return true;
  }
  return false;
}

absl::StatusOr<Equivalence> CheckEquivalence(const Graph& graph, size_t k) {
  if (graph.n > kEquivalenceMaxVertices) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "graph has ", graph.n, " vertices; at most ",
        kEquivalenceMaxVertices, " supported"));
  }
  const TokInstance instance = GraphToTok(graph);
  absl::StatusOr<BruteForceResult> best =
      BruteForceTok(instance.words, instance.candidates, k);
  if (!best.ok()) return best.status();
  Equivalence eq;
  eq.vc_yes = HasVertexCover(graph, k);
  eq.threshold = instance.threshold;
  eq.partitions = best->partitions;
  eq.tok_yes = best->partitions <= instance.threshold;
  for (size_t c : best->chosen) eq.vertices.push_back(c + 1);
  return eq;
}

}  // namespace covertok
