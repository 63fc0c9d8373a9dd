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

#ifndef COVERTOK_REDUCTION_H_
#define COVERTOK_REDUCTION_H_

// Vertex cover to token selection. Each edge {i, j} becomes the word
// (@, V_i, @, V_j, @) and each vertex the candidate (@, V_i, @). A graph has
// a vertex cover of size k exactly when k candidates bring the total
// partition count down to 3|E|.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "covertok/corpus.h"
#include "covertok/symbols.h"

namespace covertok {

// Symbol used for @; vertex i is the symbol i.
inline constexpr Symbol kSeparatorSymbol = 0;
inline constexpr size_t kEquivalenceMaxVertices = 12;

struct Graph {
  size_t n = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // 1-based, i < j.
};

// Validates vertex range, self-loops and duplicates; orients edges i < j.
absl::StatusOr<Graph> MakeGraph(
    size_t n, std::vector<std::pair<uint32_t, uint32_t>> edges);

// Edge-list text: `n` on the first line, then `i j` per line.
absl::StatusOr<Graph> ParseGraph(std::string_view text);

struct TokInstance {
  size_t alphabet_size = 0;
  std::vector<CountedWord> words;
  std::vector<SymbolString> candidates;  // Candidate i - 1 is vertex i.
  uint64_t threshold = 0;                // 3|E|.
};

TokInstance GraphToTok(const Graph& graph);

// Human-readable listing of the words, candidates and threshold.
std::string FormatTokInstance(const TokInstance& instance);

// Exhaustive search for a vertex cover of at most k vertices.
bool HasVertexCover(const Graph& graph, size_t k);

struct Equivalence {
  bool vc_yes = false;
  bool tok_yes = false;
  uint64_t threshold = 0;
  uint64_t partitions = 0;      // Best total partition count with k tokens.
  std::vector<size_t> vertices;  // 1-based vertices of the chosen tokens.
};

// Decides both problems by brute force. Fails when n exceeds
// kEquivalenceMaxVertices.
absl::StatusOr<Equivalence> CheckEquivalence(const Graph& graph, size_t k);

}  // namespace covertok

#endif  // COVERTOK_REDUCTION_H_
