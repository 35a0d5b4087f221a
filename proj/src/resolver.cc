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

#include "incoref/resolver.h"

#include <map>
#include <numeric>
#include <string>

#include "incoref/lexicon.h"

namespace incoref {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root survives, so roots are always the earliest mention.
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool IsNameToken(const Token &token) {
  return token.ner == "PER" || IsAnonTag(token.form);
}

std::string MentionText(const Document &doc, const MentionSpan &span) {
  std::string text;
  for (std::size_t t = span.start; t <= span.end; ++t) {
    if (!text.empty()) text += ' ';
    text += doc.token(span.sentence_index, t).form;
  }
  return ToLower(text);
}

}  // namespace

std::vector<CandidateMention> ExtractMentions(const Document &doc,
                                              const ClassifierConfig &cfg) {
  std::vector<CandidateMention> mentions;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence &sentence = doc.sentences[s];
    std::size_t t = 0;
    while (t < sentence.size()) {
      if (ClassifyPronoun(sentence[t], cfg)) {
        mentions.push_back({{s, t, t}, true});
        ++t;
      } else if (IsNameToken(sentence[t])) {
        std::size_t end = t;
        while (end + 1 < sentence.size() && IsNameToken(sentence[end + 1]) &&
               !ClassifyPronoun(sentence[end + 1], cfg)) {
          ++end;
        }
        mentions.push_back({{s, t, end}, false});
        t = end + 1;
      } else {
        ++t;
      }
    }
  }
  return mentions;
}

Document Resolve(const Document &doc, const ClassifierConfig &cfg,
                 const ResolverConfig &rcfg) {
  const std::vector<CandidateMention> mentions = ExtractMentions(doc, cfg);
  DisjointSets sets(mentions.size());

  if (rcfg.enable_string_match) {
    std::map<std::string, std::size_t> first_by_text;
    for (std::size_t i = 0; i < mentions.size(); ++i) {
      if (mentions[i].is_pronoun) continue;
      auto [it, inserted] = first_by_text.emplace(MentionText(doc, mentions[i].span), i);
      if (!inserted) sets.Union(it->second, i);
    }
  }

  // Mentions are in document order and never overlap, so the nearest
  // preceding name mention is the last one seen.
  std::size_t last_name = mentions.size();
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    if (!mentions[i].is_pronoun) {
      last_name = i;
      continue;
    }
    if (last_name == mentions.size()) continue;
    std::size_t distance =
        mentions[i].span.sentence_index - mentions[last_name].span.sentence_index;
    if (distance <= rcfg.pronoun_window_sentences) sets.Union(last_name, i);
  }

  std::map<std::size_t, std::vector<MentionSpan>> groups;
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    groups[sets.Find(i)].push_back(mentions[i].span);
  }
  Document out;
  out.id = doc.id;
  out.sentences = doc.sentences;
  int next_id = 0;
  for (auto &[root, spans] : groups) {
    if (spans.size() < 2) continue;
    out.clusters.push_back({next_id++, std::move(spans)});
  }
  return out;
}

}  // namespace incoref
