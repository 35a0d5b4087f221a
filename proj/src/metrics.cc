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

#include "incoref/metrics.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "incoref/errors.h"
#include "incoref/lexicon.h"
#include "incoref/parallel.h"

namespace incoref {

namespace {

double Links(std::size_t n) { return n * (n - 1) / 2.0; }

std::vector<const Cluster *> Filter(const std::vector<Cluster> &clusters,
                                    bool ignore_singletons) {
  std::vector<const Cluster *> kept;
  for (const Cluster &cluster : clusters) {
    if (ignore_singletons && cluster.size() < 2) continue;
    kept.push_back(&cluster);
  }
  return kept;
}

// Weighted resolution of `keys` against `responses`: returns
// (sum |k| * resolution(k), sum |k|).
std::pair<double, double> Resolve(const std::vector<const Cluster *> &keys,
                                  const std::vector<const Cluster *> &responses) {
  std::map<MentionSpan, std::vector<std::size_t>> owners;
  for (std::size_t r = 0; r < responses.size(); ++r) {
    for (const MentionSpan &span : responses[r]->mentions) owners[span].push_back(r);
  }
  double numerator = 0, denominator = 0;
  for (const Cluster *key : keys) {
    const std::size_t size = key->size();
    denominator += size;
    if (size == 1) {
      if (owners.count(key->mentions.front()) > 0) numerator += 1;
      continue;
    }
    std::map<std::size_t, std::size_t> overlap;
    for (const MentionSpan &span : key->mentions) {
      auto it = owners.find(span);
      if (it == owners.end()) continue;
      for (std::size_t r : it->second) ++overlap[r];
    }
    double found = 0;
    for (const auto &[r, count] : overlap) found += Links(count);
    numerator += size * found / Links(size);
  }
  return {numerator, denominator};
}

const Cluster *ClusterWith(const Document &doc, const MentionSpan &span) {
  for (const Cluster &cluster : doc.clusters) {
    if (cluster.Contains(span)) return &cluster;
  }
  return nullptr;
}

bool Intersects(const std::vector<MentionSpan> &a, const std::vector<MentionSpan> &b) {
  return std::any_of(a.begin(), a.end(), [&b](const MentionSpan &span) {
    return std::binary_search(b.begin(), b.end(), span);
  });
}

void CheckSameGrid(const Document &gold, const Document &pred) {
  bool same = gold.sentences.size() == pred.sentences.size();
  for (std::size_t s = 0; same && s < gold.sentences.size(); ++s) {
    same = gold.sentences[s].size() == pred.sentences[s].size();
  }
  if (!same) {
    throw AlignmentError("document '" + gold.id +
                         "': gold and predicted token layouts differ");
  }
}

std::string Fixed(double value, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << value;
  return out.str();
}

std::string ScoreText(const std::optional<double> &score) {
  return score ? Fixed(*score, 2) : std::string("undefined");
}

std::string MeanStdText(const MeanStd &value, int digits) {
  return Fixed(value.mean, digits) + " (sigma " + Fixed(value.stddev, digits) + ")";
}

void Row(std::ostringstream &out, const std::string &label, const std::string &value) {
  out << std::left << std::setw(26) << label << value << '\n';
}

}  // namespace

LeaCounts &LeaCounts::operator+=(const LeaCounts &other) {
  recall_numerator += other.recall_numerator;
  recall_denominator += other.recall_denominator;
  precision_numerator += other.precision_numerator;
  precision_denominator += other.precision_denominator;
  return *this;
}

LeaScore LeaCounts::Score() const {
  if (recall_denominator == 0 && precision_denominator == 0) return {1, 1, 1};
  LeaScore score;
  if (recall_denominator > 0) score.recall = recall_numerator / recall_denominator;
  if (precision_denominator > 0) {
    score.precision = precision_numerator / precision_denominator;
  }
  double sum = score.precision + score.recall;
  score.f1 = sum > 0 ? 2 * score.precision * score.recall / sum : 0;
  return score;
}

LeaCounts LeaCountsFor(const std::vector<Cluster> &gold,
                       const std::vector<Cluster> &pred, bool ignore_singletons) {
  std::vector<const Cluster *> keys = Filter(gold, ignore_singletons);
  std::vector<const Cluster *> responses = Filter(pred, ignore_singletons);
  LeaCounts counts;
  std::tie(counts.recall_numerator, counts.recall_denominator) = Resolve(keys, responses);
  std::tie(counts.precision_numerator, counts.precision_denominator) =
      Resolve(responses, keys);
  return counts;
}

LeaScore Lea(const std::vector<Cluster> &gold, const std::vector<Cluster> &pred,
             bool ignore_singletons) {
  return LeaCountsFor(gold, pred, ignore_singletons).Score();
}

std::optional<double> PronounScoreResult::score() const {
  if (total == 0) return std::nullopt;
  return 100.0 * static_cast<double>(resolved) / static_cast<double>(total);
}

PronounScoreResult &PronounScoreResult::operator+=(const PronounScoreResult &other) {
  resolved += other.resolved;
  total += other.total;
  for (const auto &[form, counts] : other.per_form) {
    per_form[form].resolved += counts.resolved;
    per_form[form].total += counts.total;
  }
  skipped_not_gold_mention += other.skipped_not_gold_mention;
  skipped_first_mention += other.skipped_first_mention;
  return *this;
}

PronounPredicate DefaultPronounPredicate(const ClassifierConfig &cfg) {
  return [cfg](const Token &token) { return ClassifyPronoun(token, cfg).has_value(); };
}

PronounScoreResult PronounScore(const Document &gold, const Document &pred,
                                const PronounPredicate &is_counted) {
  CheckSameGrid(gold, pred);
  PronounScoreResult result;
  for (const Sentence &sentence : gold.sentences) {
    for (const Token &token : sentence) {
      if (!is_counted(token)) continue;
      const MentionSpan mention{token.sentence_index, token.token_index,
                                token.token_index};
      const Cluster *gold_cluster = ClusterWith(gold, mention);
      if (gold_cluster == nullptr) {
        ++result.skipped_not_gold_mention;
        continue;
      }
      std::vector<MentionSpan> gold_ants = Antecedents(*gold_cluster, mention);
      if (gold_ants.empty()) {
        ++result.skipped_first_mention;
        continue;
      }
      const Cluster *pred_cluster = ClusterWith(pred, mention);
      bool resolved = pred_cluster != nullptr &&
                      Intersects(Antecedents(*pred_cluster, mention), gold_ants);
      FormCounts &form = result.per_form[ToLower(token.form)];
      ++form.total;
      ++result.total;
      if (resolved) {
        ++form.resolved;
        ++result.resolved;
      }
    }
  }
  return result;
}

EvalReport Evaluate(const Corpus &gold, const Corpus &pred,
                    const PronounPredicate &is_counted, const EvalOptions &options) {
  std::map<std::string, const Document *> by_id;
  for (const Document &doc : pred.documents) by_id[doc.id] = &doc;

  std::vector<std::string> unmatched;
  std::vector<std::pair<const Document *, const Document *>> pairs;
  for (const Document &doc : gold.documents) {
    auto it = by_id.find(doc.id);
    if (it == by_id.end()) {
      unmatched.push_back("gold-only '" + doc.id + "'");
      continue;
    }
    pairs.emplace_back(&doc, it->second);
    by_id.erase(it);
  }
  for (const auto &[id, doc] : by_id) unmatched.push_back("predicted-only '" + id + "'");
  if (!unmatched.empty()) {
    std::string message = "documents do not align:";
    for (const std::string &entry : unmatched) message += " " + entry;
    throw AlignmentError(message);
  }

  struct PerDocument {
    LeaCounts lea;
    PronounScoreResult pronoun;
  };
  std::vector<PerDocument> scored =
      ParallelMap(pairs, options.threads, [&](const auto &pair) {
        return PerDocument{
            LeaCountsFor(pair.first->clusters, pair.second->clusters,
                         options.ignore_singletons),
            PronounScore(*pair.first, *pair.second, is_counted)};
      });

  EvalReport report;
  report.macro = options.macro;
  report.document_count = scored.size();
  std::vector<double> per_document;
  for (const PerDocument &doc : scored) {
    report.lea_counts += doc.lea;
    report.pronoun += doc.pronoun;
    if (auto score = doc.pronoun.score()) per_document.push_back(*score);
  }
  report.lea = report.lea_counts.Score();
  if (!options.macro) {
    report.pronoun_score = report.pronoun.score();
  } else if (!per_document.empty()) {
    report.pronoun_score = ComputeMeanStd(per_document).mean;
  }
  return report;
}

MeanStd ComputeMeanStd(const std::vector<double> &values) {
  if (values.empty()) throw EmptyInputError("no values to aggregate");
  double sum = 0;
  for (double v : values) sum += v;
  const double mean = sum / values.size();
  double squares = 0;
  for (double v : values) squares += (v - mean) * (v - mean);
  return {mean, std::sqrt(squares / values.size())};
}

AggregateReport Aggregate(const std::vector<EvalReport> &reports) {
  if (reports.empty()) throw EmptyInputError("no reports to aggregate");
  std::vector<double> precision, recall, f1, pronoun;
  for (const EvalReport &report : reports) {
    precision.push_back(report.lea.precision);
    recall.push_back(report.lea.recall);
    f1.push_back(report.lea.f1);
    if (report.pronoun_score) pronoun.push_back(*report.pronoun_score);
  }
  AggregateReport out;
  out.precision = ComputeMeanStd(precision);
  out.recall = ComputeMeanStd(recall);
  out.f1 = ComputeMeanStd(f1);
  if (!pronoun.empty()) out.pronoun_score = ComputeMeanStd(pronoun);
  out.run_count = reports.size();
  return out;
}

std::string FormatReport(const EvalReport &report) {
  std::ostringstream out;
  Row(out, "metric", "value");
  Row(out, "lea precision", Fixed(report.lea.precision, 6));
  Row(out, "lea recall", Fixed(report.lea.recall, 6));
  Row(out, "lea f1", Fixed(report.lea.f1, 6));
  Row(out, "pronoun score", ScoreText(report.pronoun_score));
  Row(out, "pronouns resolved", std::to_string(report.pronoun.resolved));
  Row(out, "pronouns total", std::to_string(report.pronoun.total));
  Row(out, "skipped (not a mention)", std::to_string(report.pronoun.skipped_not_gold_mention));
  Row(out, "skipped (first mention)", std::to_string(report.pronoun.skipped_first_mention));
  Row(out, "averaging", report.macro ? "macro" : "micro");
  Row(out, "documents", std::to_string(report.document_count));
  if (!report.pronoun.per_form.empty()) {
    out << '\n';
    out << std::left << std::setw(16) << "form" << std::setw(10) << "resolved"
        << "total\n";
    for (const auto &[form, counts] : report.pronoun.per_form) {
      out << std::left << std::setw(16) << form << std::setw(10) << counts.resolved
          << counts.total << '\n';
    }
  }
  out << '\n';
  out << "lea_precision=" << Fixed(report.lea.precision, 6) << '\n';
  out << "lea_recall=" << Fixed(report.lea.recall, 6) << '\n';
  out << "lea_f1=" << Fixed(report.lea.f1, 6) << '\n';
  out << "pronoun_score=" << ScoreText(report.pronoun_score) << '\n';
  out << "pronoun_resolved=" << report.pronoun.resolved << '\n';
  out << "pronoun_total=" << report.pronoun.total << '\n';
  out << "pronoun_skipped_not_mention=" << report.pronoun.skipped_not_gold_mention << '\n';
  out << "pronoun_skipped_first_mention=" << report.pronoun.skipped_first_mention << '\n';
  for (const auto &[form, counts] : report.pronoun.per_form) {
    out << "pronoun_form." << form << '=' << counts.resolved << '/' << counts.total
        << '\n';
  }
  out << "averaging=" << (report.macro ? "macro" : "micro") << '\n';
  out << "documents=" << report.document_count << '\n';
  return out.str();
}

std::string FormatAggregate(const AggregateReport &report) {
  std::ostringstream out;
  Row(out, "metric", "mean (sigma)");
  Row(out, "lea precision", MeanStdText(report.precision, 6));
  Row(out, "lea recall", MeanStdText(report.recall, 6));
  Row(out, "lea f1", MeanStdText(report.f1, 6));
  Row(out, "pronoun score",
      report.pronoun_score ? MeanStdText(*report.pronoun_score, 2) : "undefined");
  Row(out, "runs", std::to_string(report.run_count));
  out << '\n';
  out << "lea_precision_mean=" << Fixed(report.precision.mean, 6) << '\n';
  out << "lea_precision_sigma=" << Fixed(report.precision.stddev, 6) << '\n';
  out << "lea_recall_mean=" << Fixed(report.recall.mean, 6) << '\n';
  out << "lea_recall_sigma=" << Fixed(report.recall.stddev, 6) << '\n';
  out << "lea_f1_mean=" << Fixed(report.f1.mean, 6) << '\n';
  out << "lea_f1_sigma=" << Fixed(report.f1.stddev, 6) << '\n';
  if (report.pronoun_score) {
    out << "pronoun_score_mean=" << Fixed(report.pronoun_score->mean, 2) << '\n';
    out << "pronoun_score_sigma=" << Fixed(report.pronoun_score->stddev, 2) << '\n';
  } else {
    out << "pronoun_score_mean=undefined\n";
  }
  out << "runs=" << report.run_count << '\n';
  return out.str();
}

}  // namespace incoref
