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

// covertok: train, apply and evaluate cover-based tokenizers.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "covertok/bpe.h"
#include "covertok/corpus.h"
#include "covertok/encoder.h"
#include "covertok/metrics.h"
#include "covertok/reduction.h"
#include "covertok/trainer.h"
#include "covertok/unigram.h"
#include "covertok/vocabulary.h"

namespace covertok {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

constexpr char kFormats[] = R"(File formats:
  text          arbitrary bytes; words are maximal runs of non-whitespace
                (space, tab, LF, CR). Every word gets a leading marker symbol.
  word counts   one word per line: <hex>\t<count>\n, sorted by word.
  hex           lowercase hex of the word's bytes; a leading '_' stands for
                the word-start marker (e.g. "_746865" is the marked "the").
  vocab         line 1 "GREEDTOK-VOCAB v1", line 2 "k=<n>", then n lines with
                the hex of the tokens in rank order. Bytes and the marker are
                implicit.
  merges        one merge per line: <left-hex> <right-hex>, in merge order.
  token ids     0-255 bytes, 256 marker, 256+r the vocab token of rank r.
                dec: one decimal id per line. bin: uint32 count, then that
                many uint32 ids, all little-endian.
  probs         one entry per line: <token-hex> <probability>.
  graph         first line n, then one edge "i j" per line, 1 <= i, j <= n.

Exit status: 0 success, 1 usage error, 2 data error.
Environment: COVERTOK_THREADS caps worker threads.)";

class DataError : public std::runtime_error {
 public:
  explicit DataError(const absl::Status& s)
      : std::runtime_error(std::string(s.message())) {}
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

template <typename T>
T Check(absl::StatusOr<T> v) {
  if (!v.ok()) throw DataError(v.status());
  return *std::move(v);
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(absl::StrCat("cannot read ", path));
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteOutput(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(absl::StrCat("cannot write ", path));
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

struct CorpusSource {
  std::string text = "-";
  std::string counts;

  void Register(CLI::App* app) {
    app->add_option("input", text, "Text input, '-' for stdin")->capture_default_str();
    app->add_option("--counts", counts, "Read a word-count file instead of text");
  }
  Corpus Load() const {
    if (!counts.empty()) return Check(ParseWordCounts(ReadInput(counts)));
    return Ingest(ReadInput(text));
  }
};

struct CandidateFlags {
  size_t max_len = 64;
  uint64_t min_freq = 2;

  void Register(CLI::App* app) {
    app->add_option("--max-len", max_len, "Longest candidate token")
        ->check(CLI::Range(size_t{2}, size_t{1} << 16))
        ->capture_default_str();
    app->add_option("--min-freq", min_freq, "Least candidate frequency")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  CandidateOptions Options() const { return {max_len, min_freq}; }
};

Vocabulary LoadVocab(const std::string& path) {
  return Check(ParseVocabulary(ReadInput(path)));
}

IdFormat ParseFormat(const std::string& s) {
  return s == "bin" ? IdFormat::kBinary : IdFormat::kDecimal;
}

int Run(int argc, char** argv) {
  CLI::App app{"Cover-based tokenizer training and evaluation."};
  app.footer(kFormats);
  app.require_subcommand(1);

  // count
  CLI::App* count = app.add_subcommand("count", "Text to word-count file");
  std::string count_in = "-", count_out = "-";
  count->add_option("input", count_in, "Text input, '-' for stdin");
  count->add_option("-o,--output", count_out, "Output path");

  // train
  CLI::App* train = app.add_subcommand(
      "train", "Train a vocab (greedtok) or merge list (bpe)");
  CorpusSource train_src;
  CandidateFlags train_cands;
  size_t train_k = 0;
  std::string train_algo = "greedtok", train_out = "-", train_log;
  size_t train_batch = 1;
  train_src.Register(train);
  train_cands.Register(train);
  train->add_option("--k", train_k, "Number of tokens or merges")
      ->required()
      ->check(CLI::PositiveNumber);
  train->add_option("--algo", train_algo, "greedtok or bpe")
      ->check(CLI::IsMember({"greedtok", "bpe"}))
      ->capture_default_str();
  train->add_option("--rescore-batch", train_batch,
                    "Stale queue entries refreshed per visit")
      ->check(CLI::PositiveNumber);
  train->add_option("-o,--output", train_out, "Vocab or merges output path");
  train->add_option("--log", train_log, "Write the per-step selection log here");

  // encode
  CLI::App* encode = app.add_subcommand("encode", "Text to token ids");
  std::string enc_vocab, enc_mode = "greedy", enc_format = "dec",
                         enc_in = "-", enc_out = "-";
  encode->add_option("--vocab", enc_vocab, "Vocab file")->required();
  encode->add_option("--mode", enc_mode, "greedy or optimal")
      ->check(CLI::IsMember({"greedy", "optimal"}))
      ->capture_default_str();
  encode->add_option("--format", enc_format, "dec or bin")
      ->check(CLI::IsMember({"dec", "bin"}))
      ->capture_default_str();
  encode->add_option("input", enc_in, "Text input, '-' for stdin");
  encode->add_option("-o,--output", enc_out, "Output path");

  // decode
  CLI::App* decode = app.add_subcommand("decode", "Token ids to text");
  std::string dec_vocab, dec_format = "dec", dec_in = "-", dec_out = "-";
  decode->add_option("--vocab", dec_vocab, "Vocab file")->required();
  decode->add_option("--format", dec_format, "dec or bin")
      ->check(CLI::IsMember({"dec", "bin"}))
      ->capture_default_str();
  decode->add_option("input", dec_in, "Id input, '-' for stdin");
  decode->add_option("-o,--output", dec_out, "Output path");

  // eval
  CLI::App* eval = app.add_subcommand("eval", "Compression report (TSV)");
  CorpusSource eval_src;
  CandidateFlags eval_cands;
  std::vector<size_t> eval_ks = {256, 512, 1024};
  std::vector<std::string> eval_algos = {"greedtok", "bpe"};
  bool eval_timing = false;
  std::string eval_out = "-";
  eval_src.Register(eval);
  eval_cands.Register(eval);
  eval->add_option("--k", eval_ks, "Budgets, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--algos", eval_algos, "greedtok, greedtok-opt, bpe")
      ->delimiter(',')
      ->check(CLI::IsMember({"greedtok", "greedtok-opt", "bpe"}))
      ->capture_default_str();
  eval->add_flag("--timing", eval_timing, "Add a wall-clock seconds column");
  eval->add_option("-o,--output", eval_out, "Output path");

  // dinst
  CLI::App* dinst = app.add_subcommand(
      "dinst", "GreedTok / GreedWMC objective ratio over budgets");
  CorpusSource dinst_src;
  CandidateFlags dinst_cands;
  std::vector<size_t> dinst_ks = {64, 256, 1024};
  std::string dinst_out = "-", dinst_plot;
  dinst_src.Register(dinst);
  dinst_cands.Register(dinst);
  dinst->add_option("--k", dinst_ks, "Budgets, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  dinst->add_option("-o,--output", dinst_out, "TSV output path");
  dinst->add_option("--gnuplot", dinst_plot, "Also write gnuplot data here");

  // loglik
  CLI::App* loglik = app.add_subcommand(
      "loglik", "Unigram log-likelihood of a corpus under a vocab");
  CorpusSource ll_src;
  std::string ll_vocab, ll_probs = "freq";
  bool ll_log10 = false;
  ll_src.Register(loglik);
  loglik->add_option("--vocab", ll_vocab, "Vocab file")->required();
  loglik->add_option("--probs", ll_probs,
                     "'freq' for corpus frequencies, or a probs file")
      ->capture_default_str();
  loglik->add_flag("--log10", ll_log10, "Base-10 logarithms");

  // reduce
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Vertex cover instance to tokenization instance");
  std::string red_in = "-";
  size_t red_k = 0;
  bool red_show = false;
  reduce->add_option("graph", red_in, "Graph file, '-' for stdin");
  reduce->add_option("--k", red_k, "Budget")->required();
  reduce->add_flag("--show-instance", red_show, "Print the constructed words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) {
      WriteOutput(count_out, FormatWordCounts(Ingest(ReadInput(count_in))));
    } else if (*train) {
      const Corpus corpus = train_src.Load();
      if (train_algo == "bpe") {
        WriteOutput(train_out, SerializeMerges(Check(BpeTrain(corpus.words(), train_k))));
      } else {
        const CandidateSet cands =
            Check(ExtractCandidates(corpus.words(), train_cands.Options()));
        const TrainResult r = Check(
            SelectTokens(corpus.words(), cands, train_k, {.rescore_batch = train_batch}));
        WriteOutput(train_out, SerializeVocabulary(r.vocabulary));
        if (!train_log.empty()) WriteOutput(train_log, FormatTrainingLog(r));
      }
    } else if (*encode) {
      const Vocabulary v = LoadVocab(enc_vocab);
      const EncodeMode mode =
          enc_mode == "optimal" ? EncodeMode::kOptimal : EncodeMode::kGreedy;
      WriteOutput(enc_out, SerializeIds(EncodeText(ReadInput(enc_in), v, mode),
                                        ParseFormat(enc_format)));
    } else if (*decode) {
      const Vocabulary v = LoadVocab(dec_vocab);
      const std::vector<TokenId> ids =
          Check(ParseIds(ReadInput(dec_in), ParseFormat(dec_format)));
      WriteOutput(dec_out, Check(Decode(ids, v)));
    } else if (*eval) {
      const Corpus corpus = eval_src.Load();
      CompressionOptions opts;
      opts.ks = eval_ks;
      opts.algorithms = eval_algos;
      opts.candidates = eval_cands.Options();
      const auto rows = Check(RunCompression(corpus.words(), opts));
      WriteOutput(eval_out, FormatCompressionReport(rows, eval_timing));
    } else if (*dinst) {
      const Corpus corpus = dinst_src.Load();
      const CandidateSet cands =
          Check(ExtractCandidates(corpus.words(), dinst_cands.Options()));
      const auto points = Check(DInstSweep(corpus.words(), cands, dinst_ks));
      std::string tsv = "k\tgreedtok\tgreedwmc\td_inst\n";
      const std::string data = FormatDInstData(points);
      tsv += data.substr(data.find('\n') + 1);
      WriteOutput(dinst_out, tsv);
      if (!dinst_plot.empty()) WriteOutput(dinst_plot, data);
    } else if (*loglik) {
      const Corpus corpus = ll_src.Load();
      const Vocabulary v = LoadVocab(ll_vocab);
      const LogBase base = ll_log10 ? LogBase::kTen : LogBase::kNatural;
      const std::vector<SymbolString> tokens(v.selected().begin(), v.selected().end());
      const ProbTable table =
          ll_probs == "freq" ? FrequencyProbTable(corpus.words(), tokens, base)
                             : Check(ParseProbTable(ReadInput(ll_probs), base));
      const double ll = Check(UnigramLogLikelihood(corpus.words(), tokens, table));
      std::printf("%.6f\n", ll);
    } else if (*reduce) {
      const Graph g = Check(ParseGraph(ReadInput(red_in)));
      if (red_show) std::cout << FormatTokInstance(GraphToTok(g));
      const Equivalence e = Check(CheckEquivalence(g, red_k));
      std::cout << "VC: " << (e.vc_yes ? "YES" : "NO")
                << ", TOK: " << (e.tok_yes ? "YES" : "NO")
                << ", \xe2\x84\x93=" << e.threshold << "\n";
    }
  } catch (const DataError& e) {
    std::cerr << "covertok: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace
}  // namespace covertok

int main(int argc, char** argv) { return covertok::Run(argc, argv); }
