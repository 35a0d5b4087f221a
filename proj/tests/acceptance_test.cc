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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "incoref/cli.h"
#include "incoref/conll_io.h"
#include "incoref/metrics.h"
#include "incoref/transform.h"
#include "test_util.h"

namespace incoref {
namespace {

namespace fs = std::filesystem;
using testing::FixturePath;
using testing::ReadFixture;

struct Outcome {
  bool ok = true;
  std::string detail;

  void Expect(bool condition, const std::string &what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun Cli(std::vector<std::string> args, const std::string &input = "") {
  args.insert(args.begin(), "incoref");
  std::istringstream in(input);
  std::ostringstream out, err;
  CliRun run;
  run.code = RunCli(args, in, out, err);
  run.out = out.str();
  return run;
}

std::string Slurp(const fs::path &path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool Near(double a, double b, double tolerance) { return std::abs(a - b) <= tolerance; }

Outcome LeaWorkedExample() {
  Outcome o;
  Document gold = testing::LoadFixtureDocument("raven_gold.conll");
  Document pred = testing::LoadFixtureDocument("raven_pred.conll");
  LeaScore score = Lea(gold.clusters, pred.clusters);
  o.Expect(Near(score.f1, 6.0 / 7.0, 1e-9), "f1 " + std::to_string(score.f1));
  o.Expect(Near(score.recall, 0.75, 1e-9), "recall " + std::to_string(score.recall));
  o.Expect(Near(score.precision, 1.0, 1e-9), "precision " + std::to_string(score.precision));
  return o;
}

Outcome PronounWorkedExample() {
  Outcome o;
  CliRun run = Cli({"score", "--gold", FixturePath("raven_gold.conll"), "--pred",
                    FixturePath("raven_pred.conll")});
  o.Expect(run.code == kExitOk, "score exit code");
  o.Expect(run.out.find("pronoun_score=50.00\n") != std::string::npos, "pronoun_score");
  o.Expect(run.out.find("pronoun_resolved=1\n") != std::string::npos, "pronoun_resolved");
  o.Expect(run.out.find("pronoun_total=2\n") != std::string::npos, "pronoun_total");
  return o;
}

Outcome PronounSpecificRows() {
  Outcome o;
  const std::map<std::string, std::string> rows = {
      {"hij", "Na zijn herstel vindt hij zijn persoon en zijn ouder terug in Folkestone."},
      {"zij", "Na haar herstel vindt zij haar persoon en haar ouder terug in Folkestone."},
      {"hen", "Na hun herstel vindt hen hun persoon en hun ouder terug in Folkestone."},
      {"die", "Na diens herstel vindt die diens persoon en diens ouder terug in Folkestone."},
  };
  for (const auto &[paradigm, expected] : rows) {
    CliRun run = Cli({"transform", "--paradigm", paradigm, "--anonymize", "--neutralize-nouns",
                      FixturePath("recovery.conll")});
    o.Expect(run.code == kExitOk, paradigm + " exit code");
    if (run.code != kExitOk) continue;
    Corpus corpus = ParseCorpus(std::string_view(run.out)).corpus;
    std::string text = SentenceText(corpus.documents[0].sentences[0]);
    o.Expect(text == expected, paradigm + ": " + text);
  }
  return o;
}

Outcome AnonymisationExample() {
  Outcome o;
  auto [doc, map] = AnonymizeNames(testing::LoadFixtureDocument("anonymize.conll"));
  std::string text = testing::Text(doc);
  o.Expect(text == "ANON_0 ANON_1 is op vrijdag vrij omdat ANON_0 dan voetbalt", text);
  return o;
}

std::string SyntheticCorpusText(std::size_t n) {
  Corpus corpus;
  for (std::size_t i = 0; i < n; ++i) {
    Document doc = testing::SentenceDocument(
        {{"Hij", "PRON", "Case=Nom|Gender=Masc|Number=Sing|Person=3|PronType=Prs", "O"},
         {"leest", "VERB", "", "O"},
         {".", "PUNCT", "", "O"}},
        "synthetic_" + std::to_string(i));
    doc.clusters.push_back({0, {{0, 0, 0}}});
    corpus.documents.push_back(std::move(doc));
  }
  return SerializeCorpus(corpus);
}

Outcome LowResourceAndCda(const fs::path &scratch) {
  Outcome o;
  std::string corpus = SyntheticCorpusText(625);
  for (std::size_t count : {62u, 30u, 15u, 7u}) {
    fs::path dir = scratch / ("count_" + std::to_string(count));
    fs::create_directories(dir);
    CliRun run = Cli({"sample", "--count", std::to_string(count), "--partitions", "5", "--seed",
                      "1", "--out-dir", dir.string()},
                     corpus);
    o.Expect(run.code == kExitOk, "sample exit code");
    for (int i = 0; i < 5; ++i) {
      std::string ids = Slurp(dir / ("partition_" + std::to_string(i) + ".txt"));
      std::size_t lines = static_cast<std::size_t>(std::count(ids.begin(), ids.end(), '\n'));
      o.Expect(lines == count, "partition of " + std::to_string(lines) + " for count " +
                                   std::to_string(count));
    }
  }
  fs::path record = scratch / "cda.tsv";
  CliRun cda = Cli({"cda", "--seed", "1", "--assignments", record.string()}, corpus);
  o.Expect(cda.code == kExitOk, "cda exit code");
  std::string text = Slurp(record);
  std::size_t hen = 0, die = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::string paradigm = line.substr(line.find('\t') + 1);
    if (paradigm == "hen") ++hen;
    if (paradigm == "die") ++die;
  }
  o.Expect(hen == 313 && die == 312,
           "split " + std::to_string(hen) + "/" + std::to_string(die));
  return o;
}

bool SameLayer(const Document &a, const Document &b) {
  if (a.clusters != b.clusters || a.sentences.size() != b.sentences.size()) return false;
  for (std::size_t s = 0; s < a.sentences.size(); ++s) {
    if (a.sentences[s].size() != b.sentences[s].size()) return false;
  }
  return true;
}

Outcome PropertySuites() {
  Outcome o;
  ClassifierConfig cfg;
  const RewriteLexicon &lex = BuiltinNounLexicon();

  Rng rng(20261018);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    Corpus corpus = testing::RandomCorpus(rng, 3);
    std::string text = SerializeCorpus(corpus);
    ParseResult parsed = ParseCorpus(std::string_view(text));
    o.Expect(parsed.corpus == corpus && !testing::HasParseErrors(parsed) &&
                 SerializeCorpus(parsed.corpus) == text,
             "(a) round trip instance " + std::to_string(i));
  }

  for (int i = 0; i < 500 && o.ok; ++i) {
    std::vector<MentionSpan> pool;
    std::size_t n = 1 + rng.UniformIndex(6);
    for (std::size_t m = 0; m < n; ++m) pool.push_back({rng.UniformIndex(2), m, m});
    std::vector<Cluster> gold = testing::RandomPartition(rng, pool, 3);
    std::vector<Cluster> pred = testing::RandomPartition(rng, pool, 3);
    testing::LeaOracle expected = testing::OracleLea(gold, pred);
    LeaScore got = Lea(gold, pred);
    o.Expect(Near(got.precision, expected.precision, 1e-12) &&
                 Near(got.recall, expected.recall, 1e-12) && Near(got.f1, expected.f1, 1e-12),
             "(b) lea instance " + std::to_string(i));
  }

  PronounPredicate counted = DefaultPronounPredicate(cfg);
  for (int i = 0; i < 500 && o.ok; ++i) {
    Document grid = testing::RandomDocument(rng, "d");
    std::vector<MentionSpan> pool;
    for (const Sentence &s : grid.sentences) {
      for (const Token &t : s) {
        if (rng.UniformIndex(3) != 0) pool.push_back({t.sentence_index, t.token_index, t.token_index});
      }
    }
    Document gold = grid, pred = grid;
    gold.clusters = testing::RandomPartition(rng, pool, 4);
    pred.clusters = testing::RandomPartition(rng, pool, 4);
    PronounScoreResult got = PronounScore(gold, pred, counted);

    std::size_t resolved = 0, total = 0;
    auto owner = [](const Document &d, const MentionSpan &m) -> const Cluster * {
      for (const Cluster &c : d.clusters) {
        for (const MentionSpan &x : c.mentions) {
          if (x == m) return &c;
        }
      }
      return nullptr;
    };
    for (const Sentence &s : grid.sentences) {
      for (const Token &t : s) {
        if (!counted(t)) continue;
        MentionSpan p{t.sentence_index, t.token_index, t.token_index};
        const Cluster *g = owner(gold, p);
        if (g == nullptr) continue;
        std::vector<MentionSpan> ants;
        for (const MentionSpan &m : g->mentions) {
          if (m < p) ants.push_back(m);
        }
        if (ants.empty()) continue;
        ++total;
        const Cluster *r = owner(pred, p);
        if (r == nullptr) continue;
        bool hit = false;
        for (const MentionSpan &m : r->mentions) {
          if (m < p && std::find(ants.begin(), ants.end(), m) != ants.end()) hit = true;
        }
        if (hit) ++resolved;
      }
    }
    o.Expect(got.resolved == resolved && got.total == total,
             "(c) pronoun instance " + std::to_string(i));
  }

  std::vector<std::pair<std::string, std::function<Document(const Document &)>>> transforms = {
      {"anonymize", [](const Document &d) { return AnonymizeNames(d).first; }},
      {"replace_nouns", [&](const Document &d) { return ReplaceNouns(d, lex, cfg); }},
      {"delexicalize", [&](const Document &d) { return Delexicalize(d, cfg); }},
  };
  for (const PronounParadigm &p : BuiltinParadigms()) {
    transforms.push_back({"swap_" + p.name, [&cfg, p](const Document &d) {
                            return SwapPronouns(d, p, cfg);
                          }});
    transforms.push_back({"pipeline_" + p.name, [&cfg, &lex, p](const Document &d) {
                            return PronounSpecific(d, p, cfg, lex, {true, true});
                          }});
  }
  for (int i = 0; i < 500 && o.ok; ++i) {
    Document doc = testing::RandomDocument(rng, "d");
    Document stripped = StripSingletons(doc);
    for (const auto &[name, fn] : transforms) {
      Document out = fn(doc);
      o.Expect(SameLayer(out, doc), "(d) " + name + " instance " + std::to_string(i));
      o.Expect(StripSingletons(out) == fn(stripped),
               "(e) " + name + " instance " + std::to_string(i));
    }
  }
  return o;
}

Outcome EndToEndDeterminism(const fs::path &scratch) {
  Outcome o;
  std::string fixture = FixturePath("pipeline.conll");
  std::vector<std::string> reports;
  for (const std::string &threads : {"1", "4", "1", "8"}) {
    fs::path transformed = scratch / ("die_" + threads + ".conll");
    fs::path predicted = scratch / ("pred_" + threads + ".conll");
    CliRun t = Cli({"--threads", threads, "-o", transformed.string(), "transform", "--paradigm",
                    "die", "--anonymize", "--neutralize-nouns", fixture});
    CliRun r = Cli({"--threads", threads, "-o", predicted.string(), "resolve-baseline",
                    transformed.string()});
    CliRun s = Cli({"--threads", threads, "score", "--gold", transformed.string(), "--pred",
                    predicted.string()});
    o.Expect(t.code == kExitOk && r.code == kExitOk && s.code == kExitOk, "pipeline exit code");
    o.Expect(s.out.find("lea_f1=") != std::string::npos, "report block");
    reports.push_back(s.out);
  }
  for (const std::string &report : reports) {
    o.Expect(report == reports[0], "reports differ across runs or thread counts");
  }
  return o;
}

struct Criterion {
  int number;
  const char *name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace incoref

int main() {
  using namespace incoref;
  fs::path scratch = fs::temp_directory_path() / "incoref_acceptance";
  fs::remove_all(scratch);
  fs::create_directories(scratch);

  const std::vector<Criterion> criteria = {
      {1, "LEA worked example: F1 6/7, R 0.75, P 1", 1, LeaWorkedExample},
      {2, "pronoun score worked example: 50.00 (1/2)", 1, PronounWorkedExample},
      {3, "pronoun-specific rows for hij, zij, hen, die", 1, PronounSpecificRows},
      {4, "anonymisation example", 1, AnonymisationExample},
      {5, "625 documents: partitions 62/30/15/7, cda 313/312", 5,
       [&] { return LowResourceAndCda(scratch); }},
      {6, "property suites (a) to (e)", 60, PropertySuites},
      {7, "transform, resolve, score deterministic across runs and threads", 60,
       [&] { return EndToEndDeterminism(scratch); }},
  };

  bool all_ok = true;
  for (const Criterion &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception &e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds >= c.budget_seconds) {
      outcome.ok = false;
      outcome.detail = "over time budget";
    }
    all_ok = all_ok && outcome.ok;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name
              << " (" << std::fixed << std::setprecision(3) << seconds << " s)";
    if (!outcome.ok) std::cout << " -- " << outcome.detail;
    std::cout << '\n';
  }
  fs::remove_all(scratch);
  return all_ok ? 0 : 1;
}
