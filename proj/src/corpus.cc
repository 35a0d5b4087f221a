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

#include "incoref/corpus.h"

#include <algorithm>
#include <map>
#include <set>
#include <string_view>

#include "incoref/errors.h"

namespace incoref {

namespace {

std::string SpanString(const MentionSpan &span) {
  return "[" + std::to_string(span.sentence_index) + ":" +
         std::to_string(span.start) + "-" + std::to_string(span.end) + "]";
}

void AddError(std::vector<ValidationIssue> *issues, std::string message) {
  issues->push_back({ValidationIssue::Severity::kError, std::move(message)});
}

void ThrowIfErrors(const std::vector<ValidationIssue> &issues) {
  std::string message;
  for (const ValidationIssue &issue : issues) {
    if (issue.severity != ValidationIssue::Severity::kError) continue;
    if (!message.empty()) message += "; ";
    message += issue.message;
  }
  if (!message.empty()) throw ValidationError(message);
}

bool IsPunctuation(std::string_view form) {
  static constexpr std::string_view kAttached = ".,;:!?)]}'\"";
  return form.size() == 1 && kAttached.find(form[0]) != std::string_view::npos;
}

}  // namespace

bool Cluster::Contains(const MentionSpan &span) const {
  return std::binary_search(mentions.begin(), mentions.end(), span);
}

std::size_t Document::TokenCount() const {
  std::size_t count = 0;
  for (const Sentence &sentence : sentences) count += sentence.size();
  return count;
}

const Cluster *Document::FindCluster(int id) const {
  for (const Cluster &cluster : clusters) {
    if (cluster.id == id) return &cluster;
  }
  return nullptr;
}

std::vector<ValidationIssue> ValidateDocument(const Document &doc) {
  std::vector<ValidationIssue> issues;
  const std::string where = "document '" + doc.id + "'";
  if (doc.id.empty()) AddError(&issues, "document id is empty");

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence &sentence = doc.sentences[s];
    if (sentence.empty()) {
      AddError(&issues, where + ": sentence " + std::to_string(s) + " is empty");
    }
    for (std::size_t t = 0; t < sentence.size(); ++t) {
      const Token &token = sentence[t];
      const std::string at = where + ": token " + std::to_string(s) + ":" +
                             std::to_string(t);
      if (token.sentence_index != s || token.token_index != t) {
        AddError(&issues, at + ": position fields disagree with layout");
      }
      if (token.form.empty()) AddError(&issues, at + ": empty form");
      if (token.dep_head != Token::kRoot &&
          (token.dep_head < 0 ||
           static_cast<std::size_t>(token.dep_head) >= sentence.size())) {
        AddError(&issues, at + ": dependency head out of range");
      }
    }
  }

  std::set<int> ids;
  std::map<MentionSpan, int> owner;
  for (const Cluster &cluster : doc.clusters) {
    const std::string at = where + ": cluster " + std::to_string(cluster.id);
    if (!ids.insert(cluster.id).second) {
      AddError(&issues, at + ": duplicate cluster id");
    }
    if (cluster.mentions.empty()) AddError(&issues, at + ": no mentions");
    for (std::size_t i = 0; i < cluster.mentions.size(); ++i) {
      const MentionSpan &span = cluster.mentions[i];
      if (i > 0 && !(cluster.mentions[i - 1] < span)) {
        AddError(&issues, at + ": mentions not strictly in document order at " +
                              SpanString(span));
      }
      if (span.start > span.end) {
        AddError(&issues, at + ": inverted span " + SpanString(span));
        continue;
      }
      if (span.sentence_index >= doc.sentences.size() ||
          span.end >= doc.sentences[span.sentence_index].size()) {
        AddError(&issues, at + ": span out of range " + SpanString(span));
        continue;
      }
      auto [it, inserted] = owner.emplace(span, cluster.id);
      if (!inserted && it->second != cluster.id) {
        issues.push_back({ValidationIssue::Severity::kWarning,
                          at + ": span " + SpanString(span) +
                              " also annotated in cluster " +
                              std::to_string(it->second)});
      }
    }
  }
  return issues;
}

std::vector<ValidationIssue> ValidateCorpus(const Corpus &corpus) {
  std::vector<ValidationIssue> issues;
  std::set<std::string> ids;
  for (const Document &doc : corpus.documents) {
    if (!ids.insert(doc.id).second) {
      AddError(&issues, "duplicate document id '" + doc.id + "'");
    }
    std::vector<ValidationIssue> doc_issues = ValidateDocument(doc);
    issues.insert(issues.end(), doc_issues.begin(), doc_issues.end());
  }
  return issues;
}

void CheckValid(const Document &doc) { ThrowIfErrors(ValidateDocument(doc)); }

void CheckValid(const Corpus &corpus) { ThrowIfErrors(ValidateCorpus(corpus)); }

void Canonicalize(Cluster *cluster) {
  std::sort(cluster->mentions.begin(), cluster->mentions.end());
}

void Canonicalize(Document *doc) {
  for (Cluster &cluster : doc->clusters) Canonicalize(&cluster);
  std::stable_sort(doc->clusters.begin(), doc->clusters.end(),
                   [](const Cluster &a, const Cluster &b) { return a.id < b.id; });
}

std::vector<MentionSpan> Antecedents(const Cluster &cluster,
                                     const MentionSpan &of) {
  auto it = std::lower_bound(cluster.mentions.begin(), cluster.mentions.end(), of);
  if (it == cluster.mentions.end() || *it != of) {
    throw NotAMemberError("mention " + SpanString(of) + " is not in cluster " +
                          std::to_string(cluster.id));
  }
  return {cluster.mentions.begin(), it};
}

std::vector<MentionHit> MentionsContaining(const Document &doc,
                                           std::size_t sentence_index,
                                           std::size_t token_index) {
  if (sentence_index >= doc.sentences.size() ||
      token_index >= doc.sentences[sentence_index].size()) {
    throw BoundsError("token " + std::to_string(sentence_index) + ":" +
                      std::to_string(token_index) + " is outside document '" +
                      doc.id + "'");
  }
  std::vector<MentionHit> hits;
  for (const Cluster &cluster : doc.clusters) {
    for (const MentionSpan &span : cluster.mentions) {
      if (span.Covers(sentence_index, token_index)) {
        hits.push_back({cluster.id, span});
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const MentionHit &a, const MentionHit &b) {
    if (a.span.length() != b.span.length()) {
      return a.span.length() < b.span.length();
    }
    if (a.span != b.span) return a.span < b.span;
    return a.cluster_id < b.cluster_id;
  });
  return hits;
}

bool HasFeature(const std::string &feats, const std::string &item) {
  std::string_view rest = feats;
  while (!rest.empty()) {
    std::size_t bar = rest.find('|');
    if (rest.substr(0, bar) == item) return true;
    if (bar == std::string_view::npos) break;
    rest.remove_prefix(bar + 1);
  }
  return false;
}

std::string SentenceText(const Sentence &sentence) {
  std::string text;
  for (const Token &token : sentence) {
    if (!text.empty() && !IsPunctuation(token.form)) text += ' ';
    text += token.form;
  }
  return text;
}

}  // namespace incoref
