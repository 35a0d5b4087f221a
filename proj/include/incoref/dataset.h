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

// Corpus-level dataset construction: counterfactually augmented (CDA)
// corpora, low-resource training partitions and unseen-neopronoun test sets.
// All randomness comes from the seed argument; planning is sequential and the
// per-document rewriting may run on several threads without changing output.

#ifndef INCOREF_DATASET_H_
#define INCOREF_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incoref/corpus.h"
#include "incoref/lexicon.h"
#include "incoref/transform.h"

namespace incoref {

struct DocumentAssignment {
  std::string document_id;
  std::string paradigm;

  bool operator==(const DocumentAssignment &other) const = default;
};

// One entry per document, in corpus order.
using AssignmentRecord = std::vector<DocumentAssignment>;

struct BuildResult {
  Corpus corpus;
  AssignmentRecord assignment;
};

struct RewriteContext {
  const ClassifierConfig &cfg;
  const RewriteLexicon &lexicon;
  PipelineOptions options;
  int threads = 1;
};

// Shuffles the documents with `seed`, assigns the first half (rounded up)
// to hen and the rest to die, and rewrites each document with its paradigm.
// Output keeps the input order. Throws EmptyCorpusError.
BuildResult BuildCda(const Corpus &corpus, std::uint64_t seed,
                     const RewriteContext &ctx);

// Exact non-negative rational, parsed from "0.0125", "1/80" or "1".
struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  // Throws ValidationError on malformed text.
  static Fraction Parse(std::string_view text);
  // floor(numerator * n / denominator).
  std::uint64_t FloorTimes(std::uint64_t n) const;
};

struct PartitionSpec {
  // Exactly one of fraction and count is set.
  std::optional<Fraction> fraction;
  std::optional<std::size_t> count;
  std::size_t n_partitions = 1;
  std::uint64_t seed = 0;
};

// Documents per partition: count, or floor(fraction * corpus_size). Throws
// DegenerateFractionError if that is zero and ValidationError if the request is
// malformed or asks for more documents than the corpus holds.
std::size_t PartitionSize(std::size_t corpus_size, const PartitionSpec &spec);

// Independent samples without replacement; ids in corpus order.
std::vector<std::vector<std::string>> SamplePartitions(const Corpus &corpus,
                                                       const PartitionSpec &spec);

// Per-document uniform neopronoun, or one fixed paradigm for the corpus.
struct UnseenMode {
  std::optional<std::string> fixed;
};

// Throws NotFoundError for an unknown fixed paradigm.
BuildResult BuildUnseen(const Corpus &corpus, std::uint64_t seed,
                        const UnseenMode &mode, const RewriteContext &ctx);

// "doc_id<TAB>paradigm" lines.
std::string FormatAssignment(const AssignmentRecord &record);

// One id per line.
std::string FormatPartition(const std::vector<std::string> &ids);

}  // namespace incoref

#endif  // INCOREF_DATASET_H_
