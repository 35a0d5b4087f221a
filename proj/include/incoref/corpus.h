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

// In-memory model of coreference-annotated documents: tokens with
// morphosyntactic and NER columns, mention spans, and clusters of mentions.

#ifndef INCOREF_CORPUS_H_
#define INCOREF_CORPUS_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace incoref {

struct Token {
  // Dependency head value for the sentence root.
  static constexpr int kRoot = -1;

  std::size_t sentence_index = 0;
  std::size_t token_index = 0;
  std::string form;
  std::string lemma;
  std::string pos;
  // Pipe-separated feature items, e.g. "Case=Nom|Person=3". May be empty.
  std::string feats;
  // 0-based index of the head token within the sentence, or kRoot.
  int dep_head = kRoot;
  std::string dep_rel;
  std::string ner = "O";

  bool operator==(const Token &other) const = default;
};

// Inclusive token range [start, end] within one sentence.
struct MentionSpan {
  std::size_t sentence_index = 0;
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start + 1; }
  bool Covers(std::size_t sentence, std::size_t token) const {
    return sentence == sentence_index && start <= token && token <= end;
  }

  // Document order: (sentence, start, end) lexicographic, so among nested
  // spans sharing a start the shorter one comes first.
  auto operator<=>(const MentionSpan &other) const = default;
};

struct Cluster {
  int id = 0;
  // Sorted in document order, no duplicates.
  std::vector<MentionSpan> mentions;

  std::size_t size() const { return mentions.size(); }
  bool Contains(const MentionSpan &span) const;

  bool operator==(const Cluster &other) const = default;
};

using Sentence = std::vector<Token>;

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::vector<Cluster> clusters;

  std::size_t TokenCount() const;
  const Token &token(std::size_t sentence, std::size_t index) const {
    return sentences[sentence][index];
  }

  // Returns the cluster with the given id, or nullptr.
  const Cluster *FindCluster(int id) const;

  bool operator==(const Document &other) const = default;
};

struct Corpus {
  std::vector<Document> documents;
  std::optional<std::string> split_label;

  bool operator==(const Corpus &other) const = default;
};

struct ValidationIssue {
  enum class Severity { kError, kWarning };
  Severity severity = Severity::kError;
  std::string message;
};

// Checks every Document invariant. Identical spans in different clusters are
// reported as warnings; everything else is an error.
std::vector<ValidationIssue> ValidateDocument(const Document &doc);

// Checks every document plus corpus-level id uniqueness.
std::vector<ValidationIssue> ValidateCorpus(const Corpus &corpus);

// Throws ValidationError listing all errors found, if any.
void CheckValid(const Document &doc);
void CheckValid(const Corpus &corpus);

// Sorts mentions into document order and clusters by id.
void Canonicalize(Cluster *cluster);
void Canonicalize(Document *doc);

// All mentions of `cluster` strictly preceding `of`, in document order.
// Throws NotAMemberError if `of` is not in the cluster.
std::vector<MentionSpan> Antecedents(const Cluster &cluster,
                                     const MentionSpan &of);

struct MentionHit {
  int cluster_id = 0;
  MentionSpan span;

  bool operator==(const MentionHit &other) const = default;
};

// All (cluster, span) pairs whose span covers the token, innermost first
// (shortest span first; ties by cluster id). Throws BoundsError on invalid
// coordinates.
std::vector<MentionHit> MentionsContaining(const Document &doc,
                                           std::size_t sentence_index,
                                           std::size_t token_index);

// Returns true if `feats` contains `item` as one of its pipe-separated items.
bool HasFeature(const std::string &feats, const std::string &item);

// Space-joined sentence text with punctuation attached to the preceding token.
std::string SentenceText(const Sentence &sentence);

}  // namespace incoref

#endif  // INCOREF_CORPUS_H_
