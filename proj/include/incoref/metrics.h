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

// Coreference evaluation: the link-based entity-aware (LEA) metric and the
// pronoun score, the percentage of third-person singular pronouns for which
// the predicted cluster contains at least one correct antecedent.

#ifndef INCOREF_METRICS_H_
#define INCOREF_METRICS_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incoref/corpus.h"
#include "incoref/transform.h"

namespace incoref {

struct LeaScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Numerators and denominators of LEA recall and precision. Adding counts of
// disjoint documents gives the corpus-level (micro) score.
struct LeaCounts {
  double recall_numerator = 0;
  double recall_denominator = 0;
  double precision_numerator = 0;
  double precision_denominator = 0;

  LeaCounts &operator+=(const LeaCounts &other);
  // Both sides empty scores 1/1/1; an empty side otherwise scores 0.
  LeaScore Score() const;
};

// Each entity k is weighted by |k| and scored by the fraction of its links
// found in the other side. A singleton has one self-link, which counts as
// found when its mention appears in any cluster of the other side. Mentions
// match by exact span. With `ignore_singletons`, clusters of size one are
// dropped from both sides first.
LeaCounts LeaCountsFor(const std::vector<Cluster> &gold,
                       const std::vector<Cluster> &pred,
                       bool ignore_singletons = false);
LeaScore Lea(const std::vector<Cluster> &gold, const std::vector<Cluster> &pred,
             bool ignore_singletons = false);

struct FormCounts {
  std::size_t resolved = 0;
  std::size_t total = 0;

  bool operator==(const FormCounts &other) const = default;
};

struct PronounScoreResult {
  std::size_t resolved = 0;
  std::size_t total = 0;
  // Keyed by lowercase gold form.
  std::map<std::string, FormCounts> per_form;
  // Counted pronouns left out of the total: not a single-token gold mention,
  // or the first mention of their gold cluster.
  std::size_t skipped_not_gold_mention = 0;
  std::size_t skipped_first_mention = 0;

  // 100 * resolved / total, or nothing when no pronoun was scored.
  std::optional<double> score() const;

  PronounScoreResult &operator+=(const PronounScoreResult &other);
};

using PronounPredicate = std::function<bool(const Token &)>;

// Counts tokens for which ClassifyPronoun succeeds.
PronounPredicate DefaultPronounPredicate(const ClassifierConfig &cfg);

// Scores every counted pronoun that is a single-token gold mention with at
// least one gold antecedent. Throws AlignmentError when the two documents do
// not share a token grid.
PronounScoreResult PronounScore(const Document &gold, const Document &pred,
                                const PronounPredicate &is_counted);

struct EvalOptions {
  // Average per-document pronoun scores instead of pooling counts.
  bool macro = false;
  bool ignore_singletons = false;
  int threads = 1;
};

struct EvalReport {
  LeaCounts lea_counts;
  LeaScore lea;
  PronounScoreResult pronoun;
  // Pronoun score as reported: pooled, or the mean over documents with a
  // defined score when macro averaging.
  std::optional<double> pronoun_score;
  bool macro = false;
  std::size_t document_count = 0;
};

// Pairs documents by id. Throws AlignmentError listing unmatched ids.
EvalReport Evaluate(const Corpus &gold, const Corpus &pred,
                    const PronounPredicate &is_counted,
                    const EvalOptions &options = {});

struct MeanStd {
  double mean = 0;
  double stddev = 0;  // population
};

struct AggregateReport {
  MeanStd precision;
  MeanStd recall;
  MeanStd f1;
  // Over the runs whose pronoun score is defined; empty if none is.
  std::optional<MeanStd> pronoun_score;
  std::size_t run_count = 0;
};

MeanStd ComputeMeanStd(const std::vector<double> &values);

// Throws EmptyInputError on an empty list.
AggregateReport Aggregate(const std::vector<EvalReport> &reports);

// Aligned table followed by a key=value block.
std::string FormatReport(const EvalReport &report);
std::string FormatAggregate(const AggregateReport &report);

}  // namespace incoref

#endif  // INCOREF_METRICS_H_
