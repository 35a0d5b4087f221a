// Copyright 2026 The incoref Authors.
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

#include "incoref/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "incoref/conll_io.h"
#include "incoref/corpus.h"
#include "incoref/dataset.h"
#include "incoref/errors.h"
#include "incoref/lexicon.h"
#include "incoref/metrics.h"
#include "incoref/parallel.h"
#include "incoref/resolver.h"
#include "incoref/stats.h"
#include "incoref/transform.h"

namespace incoref {

namespace {

// Paradigm name selecting the baseline variant (no pronoun swap).
constexpr const char *kIdentityParadigm = "identity";

struct RunConfig {
  std::string input = "-";
  std::string output;
  std::string config_path;
  std::string lexicon_path;
  int threads = 1;

  std::string paradigm;
  bool anonymize = false;
  bool neutralize_nouns = false;
  std::uint64_t seed = 0;
  std::string fraction;
  std::size_t count = 0;
  std::size_t partitions = 1;
  std::string out_dir;
  std::string sidecar;
  std::string fixed;
  std::string forms;
  std::size_t window = 2;
  bool no_string_match = false;
  std::string gold;
  std::vector<std::string> preds;
  bool macro = false;
  bool ignore_singletons = false;
};

// Output produced by a subcommand, written only once the command succeeds.
struct Outputs {
  std::string primary;
  std::map<std::string, std::string> files;
};

std::string ReadFile(const std::string &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw IoError("failed to read '" + path + "'");
  return buffer.str();
}

std::string ReadInput(const std::string &path, std::istream &in) {
  if (path != "-") return ReadFile(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed to read standard input");
  return buffer.str();
}

Corpus LoadCorpus(const std::string &path, std::istream &in, std::ostream &err) {
  ParseResult result;
  try {
    result = ParseCorpus(std::string_view(ReadInput(path, in)));
  } catch (const EmptyCorpusError &e) {
    throw EmptyCorpusError((path == "-" ? std::string("<stdin>") : path) + ": " +
                           e.what());
  }
  for (const ParseDiagnostic &d : result.diagnostics) {
    err << (path == "-" ? std::string("<stdin>") : path) << ": " << d.ToString()
        << '\n';
  }
  return std::move(result.corpus);
}

ClassifierConfig LoadConfig(const RunConfig &rc) {
  if (rc.config_path.empty()) return ClassifierConfig();
  return LoadClassifierConfig(std::string_view(ReadFile(rc.config_path)));
}

RewriteLexicon LoadLexicon(const RunConfig &rc, std::ostream &err) {
  if (rc.lexicon_path.empty()) return BuiltinNounLexicon();
  LexiconLoadResult result = LoadNounLexicon(std::string_view(ReadFile(rc.lexicon_path)));
  for (const std::string &warning : result.warnings) {
    err << rc.lexicon_path << ": warning: " << warning << '\n';
  }
  return std::move(result.lexicon);
}

template <typename Fn>
Corpus MapDocuments(const Corpus &corpus, int threads, Fn fn) {
  Corpus out;
  out.split_label = corpus.split_label;
  out.documents = ParallelMap(corpus.documents, threads, fn);
  return out;
}

std::vector<std::string> SplitComma(const std::string &text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

Outputs RunStats(const RunConfig &rc, std::istream &in, std::ostream &err) {
  Corpus corpus = LoadCorpus(rc.input, in, err);
  std::vector<std::string> forms =
      rc.forms.empty() ? DefaultStatsForms() : SplitComma(rc.forms);
  return {FormatFrequencyReport(PronounFrequencies(corpus, forms, LoadConfig(rc))), {}};
}

Outputs RunStripSingletons(const RunConfig &rc, std::istream &in, std::ostream &err) {
  Corpus corpus = LoadCorpus(rc.input, in, err);
  return {SerializeCorpus(MapDocuments(corpus, rc.threads, StripSingletons)), {}};
}

Outputs RunTransform(const RunConfig &rc, std::istream &in, std::ostream &err) {
  std::optional<PronounParadigm> paradigm;
  if (rc.paradigm != kIdentityParadigm) paradigm = FindParadigm(rc.paradigm);
  ClassifierConfig cfg = LoadConfig(rc);
  RewriteLexicon lexicon = LoadLexicon(rc, err);
  Corpus corpus = LoadCorpus(rc.input, in, err);
  PipelineOptions options{rc.anonymize, rc.neutralize_nouns};
  return {SerializeCorpus(MapDocuments(corpus, rc.threads,
                                       [&](const Document &doc) {
                                         return PronounSpecific(doc, paradigm, cfg,
                                                                lexicon, options);
                                       })),
          {}};
}

Outputs RunDelex(const RunConfig &rc, std::istream &in, std::ostream &err) {
  ClassifierConfig cfg = LoadConfig(rc);
  Corpus corpus = LoadCorpus(rc.input, in, err);
  return {SerializeCorpus(MapDocuments(
              corpus, rc.threads,
              [&cfg](const Document &doc) { return Delexicalize(doc, cfg); })),
          {}};
}

Outputs RunCda(const RunConfig &rc, std::istream &in, std::ostream &err) {
  ClassifierConfig cfg = LoadConfig(rc);
  RewriteLexicon lexicon = LoadLexicon(rc, err);
  Corpus corpus = LoadCorpus(rc.input, in, err);
  RewriteContext ctx{cfg, lexicon, {rc.anonymize, rc.neutralize_nouns}, rc.threads};
  BuildResult result = BuildCda(corpus, rc.seed, ctx);
  Outputs outputs{SerializeCorpus(result.corpus), {}};
  if (!rc.sidecar.empty()) outputs.files[rc.sidecar] = FormatAssignment(result.assignment);
  return outputs;
}

Outputs RunSample(const RunConfig &rc, std::istream &in, std::ostream &err) {
  PartitionSpec spec;
  if (!rc.fraction.empty()) {
    spec.fraction = Fraction::Parse(rc.fraction);
  } else {
    spec.count = rc.count;
  }
  spec.n_partitions = rc.partitions;
  spec.seed = rc.seed;
  Corpus corpus = LoadCorpus(rc.input, in, err);
  std::vector<std::vector<std::string>> partitions = SamplePartitions(corpus, spec);

  Outputs outputs;
  for (std::size_t p = 0; p < partitions.size(); ++p) {
    if (rc.out_dir.empty()) {
      outputs.primary += "#partition " + std::to_string(p) + "\n";
      outputs.primary += FormatPartition(partitions[p]);
    } else {
      std::filesystem::path path = std::filesystem::path(rc.out_dir) /
                                   ("partition_" + std::to_string(p) + ".txt");
      outputs.files[path.string()] = FormatPartition(partitions[p]);
    }
  }
  return outputs;
}

Outputs RunUnseen(const RunConfig &rc, std::istream &in, std::ostream &err) {
  UnseenMode mode;
  if (!rc.fixed.empty()) {
    FindParadigm(rc.fixed);
    mode.fixed = rc.fixed;
  }
  ClassifierConfig cfg = LoadConfig(rc);
  RewriteLexicon lexicon = LoadLexicon(rc, err);
  Corpus corpus = LoadCorpus(rc.input, in, err);
  RewriteContext ctx{cfg, lexicon, {rc.anonymize, rc.neutralize_nouns}, rc.threads};
  BuildResult result = BuildUnseen(corpus, rc.seed, mode, ctx);
  Outputs outputs{SerializeCorpus(result.corpus), {}};
  if (!rc.sidecar.empty()) outputs.files[rc.sidecar] = FormatAssignment(result.assignment);
  return outputs;
}

Outputs RunResolve(const RunConfig &rc, std::istream &in, std::ostream &err) {
  ClassifierConfig cfg = LoadConfig(rc);
  ResolverConfig rcfg{rc.window, !rc.no_string_match};
  Corpus corpus = LoadCorpus(rc.input, in, err);
  return {SerializeCorpus(MapDocuments(
              corpus, rc.threads,
              [&](const Document &doc) { return Resolve(doc, cfg, rcfg); })),
          {}};
}

Outputs RunScore(const RunConfig &rc, std::istream &in, std::ostream &err) {
  ClassifierConfig cfg = LoadConfig(rc);
  Corpus gold = LoadCorpus(rc.gold, in, err);
  EvalOptions options{rc.macro, rc.ignore_singletons, rc.threads};
  PronounPredicate counted = DefaultPronounPredicate(cfg);

  std::vector<EvalReport> reports;
  for (const std::string &path : rc.preds) {
    reports.push_back(Evaluate(gold, LoadCorpus(path, in, err), counted, options));
  }
  if (reports.size() == 1) return {FormatReport(reports.front()), {}};

  Outputs outputs;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    outputs.primary += "== " + rc.preds[i] + "\n" + FormatReport(reports[i]) + "\n";
  }
  outputs.primary += "== aggregate\n" + FormatAggregate(Aggregate(reports));
  return outputs;
}

void WriteFile(const std::string &path, const std::string &contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << contents;
  if (!file) throw IoError("failed writing '" + path + "'");
}

void AddInput(CLI::App *sub, RunConfig *rc) {
  sub->add_option("input", rc->input, "Corpus file, '-' for standard input");
}

void AddPipelineFlags(CLI::App *sub, RunConfig *rc) {
  sub->add_flag("--anonymize", rc->anonymize, "Replace PER tokens by ANON_x tags");
  sub->add_flag("--neutralize-nouns", rc->neutralize_nouns,
                "Replace gendered nouns by neutral ones");
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
           std::ostream &err) {
  RunConfig rc;
  CLI::App app{"Gender-inclusive coreference corpus tools"};
  app.name(args.empty() ? "incoref" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", rc.output, "Write primary output to this file");
  app.add_option("--config", rc.config_path, "Pronoun classifier config (key = value)");
  app.add_option("--lexicon", rc.lexicon_path, "Noun rewrite lexicon (TSV)");
  app.add_option("--threads", rc.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::map<CLI::App *, Outputs (*)(const RunConfig &, std::istream &, std::ostream &)>
      handlers;

  CLI::App *stats = app.add_subcommand("stats", "Pronoun frequency statistics");
  AddInput(stats, &rc);
  stats->add_option("--forms", rc.forms, "Comma-separated forms to count");
  handlers[stats] = RunStats;

  CLI::App *strip = app.add_subcommand("strip-singletons", "Remove singleton clusters");
  AddInput(strip, &rc);
  handlers[strip] = RunStripSingletons;

  CLI::App *transform =
      app.add_subcommand("transform", "Build a pronoun-specific corpus variant");
  AddInput(transform, &rc);
  transform
      ->add_option("--paradigm", rc.paradigm,
                   "Target paradigm name, or 'identity' to keep pronouns")
      ->required();
  AddPipelineFlags(transform, &rc);
  handlers[transform] = RunTransform;

  CLI::App *delex = app.add_subcommand("delex", "Replace pronouns by role tags");
  AddInput(delex, &rc);
  handlers[delex] = RunDelex;

  CLI::App *cda = app.add_subcommand("cda", "Build a hen/die augmented corpus");
  AddInput(cda, &rc);
  cda->add_option("--seed", rc.seed, "Random seed");
  cda->add_option("--assignments", rc.sidecar, "Write doc_id<TAB>paradigm here");
  AddPipelineFlags(cda, &rc);
  handlers[cda] = RunCda;

  CLI::App *sample = app.add_subcommand("sample", "Sample low-resource partitions");
  AddInput(sample, &rc);
  CLI::Option *fraction =
      sample->add_option("--fraction", rc.fraction, "Share of documents, e.g. 0.1");
  CLI::Option *count =
      sample->add_option("--count", rc.count, "Documents per partition")
          ->check(CLI::PositiveNumber);
  fraction->excludes(count);
  count->excludes(fraction);
  sample->add_option("--partitions", rc.partitions, "Number of partitions")
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", rc.seed, "Random seed");
  sample->add_option("--out-dir", rc.out_dir, "Write partition_<i>.txt files here");
  handlers[sample] = RunSample;

  CLI::App *unseen = app.add_subcommand("unseen", "Build a neopronoun test set");
  AddInput(unseen, &rc);
  unseen->add_option("--seed", rc.seed, "Random seed");
  unseen->add_option("--fixed", rc.fixed, "Use one paradigm for every document");
  unseen->add_option("--record", rc.sidecar, "Write doc_id<TAB>paradigm here");
  AddPipelineFlags(unseen, &rc);
  handlers[unseen] = RunUnseen;

  CLI::App *resolve =
      app.add_subcommand("resolve-baseline", "Heuristic coreference predictions");
  AddInput(resolve, &rc);
  resolve->add_option("--window", rc.window, "Pronoun window in sentences");
  resolve->add_flag("--no-string-match", rc.no_string_match,
                    "Disable the exact-match sieve");
  handlers[resolve] = RunResolve;

  CLI::App *score = app.add_subcommand("score", "LEA and pronoun score");
  score->add_option("--gold", rc.gold, "Gold corpus")->required();
  score->add_option("--pred", rc.preds, "Predicted corpus; repeat to aggregate runs")
      ->required();
  score->add_flag("--macro", rc.macro, "Macro-average the pronoun score");
  score->add_flag("--ignore-singletons", rc.ignore_singletons,
                  "Drop singleton clusters before LEA");
  handlers[score] = RunScore;

  try {
    // CLI11 consumes the argument vector from the back.
    std::vector<std::string> reversed;
    for (std::size_t i = args.size(); i > 1; --i) reversed.push_back(args[i - 1]);
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError &e) {
    std::ostringstream usage_out;
    int code = app.exit(e, usage_out, err);
    out << usage_out.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App *chosen = app.get_subcommands().front();
  if (chosen == sample && fraction->count() == 0 && count->count() == 0) {
    err << "sample: one of --fraction or --count is required\n";
    return kExitUsage;
  }
  try {
    Outputs outputs = handlers.at(chosen)(rc, in, err);
    for (const auto &[path, contents] : outputs.files) WriteFile(path, contents);
    if (rc.output.empty()) {
      out << outputs.primary;
      out.flush();
    } else {
      WriteFile(rc.output, outputs.primary);
    }
  } catch (const Error &e) {
    err << chosen->get_name() << ": error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    err << chosen->get_name() << ": error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace incoref
