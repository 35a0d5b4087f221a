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

// Token-level rewriting of documents. Every transform keeps the sentence and
// token layout and the coreference layer untouched; only form and lemma of
// selected tokens change.

#ifndef INCOREF_TRANSFORM_H_
#define INCOREF_TRANSFORM_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incoref/corpus.h"
#include "incoref/lexicon.h"

namespace incoref {

enum class PronounRole { kSubject, kObject, kPossessive };

std::string_view RoleName(PronounRole role);

// Form of `paradigm` for `role`.
const std::string &FormFor(const PronounParadigm &paradigm, PronounRole role);

// Matches a token when its POS is one of `pos` (any POS if empty) and its
// feats carry every item of `feats`.
struct TokenPredicate {
  std::vector<std::string> pos;
  std::vector<std::string> feats;

  bool Matches(const Token &token) const;
  bool operator==(const TokenPredicate &other) const = default;
};

// Describes how the corpus tagset marks pronoun functions. The defaults target
// UD-style features.
struct ClassifierConfig {
  TokenPredicate personal{{"PRON"}, {"PronType=Prs"}};
  TokenPredicate possessive{{"PRON", "DET"}, {"Poss=Yes"}};
  TokenPredicate relative{{"PRON"}, {"PronType=Rel"}};
  TokenPredicate demonstrative{{"PRON", "DET"}, {"PronType=Dem"}};
  TokenPredicate nominal{{"NOUN"}, {}};
  std::vector<std::string> nominative{"Case=Nom"};
  std::vector<std::string> third_person{"Person=3"};
  std::vector<std::string> singular{"Number=Sing"};
  std::vector<std::string> masculine{"Gender=Masc"};

  bool operator==(const ClassifierConfig &other) const = default;
};

// Reads "key = value" lines. Keys are `<predicate>.pos` (comma-separated POS
// tags) and `<predicate>.feats` (pipe-separated items) for the predicates
// personal, possessive, relative, demonstrative and nominal, plus the feature
// lists nominative, third_person, singular and masculine. Unset keys keep
// their defaults; an empty value clears the list. Throws ParseError.
ClassifierConfig LoadClassifierConfig(std::string_view text);
ClassifierConfig LoadClassifierConfig(std::istream &in);

// Role of a third-person singular personal or possessive pronoun, or nothing
// for any other token.
std::optional<PronounRole> ClassifyPronoun(const Token &token,
                                           const ClassifierConfig &cfg);

// Replaces every classified pronoun by the paradigm form for its role.
Document SwapPronouns(const Document &doc, const PronounParadigm &paradigm,
                      const ClassifierConfig &cfg);

// Name string -> index, dense from 0 in order of first occurrence.
class AnonymizationMap {
 public:
  // Returns the index for `name`, assigning the next one if it is new.
  std::size_t Assign(const std::string &name);
  std::optional<std::size_t> Find(const std::string &name) const;

  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  // Names in index order.
  const std::vector<std::string> &names() const { return order_; }

  static std::string Tag(std::size_t index);

  bool operator==(const AnonymizationMap &other) const = default;

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> order_;
};

// True for forms of the shape ANON_<digits>.
bool IsAnonTag(std::string_view form);

// Replaces every PER-tagged token by ANON_x, keyed by the exact form.
std::pair<Document, AnonymizationMap> AnonymizeNames(const Document &doc);

// Replaces nominal tokens found in the lexicon by their neutral form.
Document ReplaceNouns(const Document &doc, const RewriteLexicon &lexicon,
                      const ClassifierConfig &cfg);

// Replaces classified pronouns by <SUBJ>, <OBJ> or <POSS>.
Document Delexicalize(const Document &doc, const ClassifierConfig &cfg);

inline constexpr std::string_view kSubjectTag = "<SUBJ>";
inline constexpr std::string_view kObjectTag = "<OBJ>";
inline constexpr std::string_view kPossessiveTag = "<POSS>";

struct PipelineOptions {
  bool anonymize = false;
  bool neutralize_nouns = false;
};

// Swap pronouns (skipped when `paradigm` is empty, which yields the baseline
// variant), then optionally anonymise names and replace gendered nouns.
Document PronounSpecific(const Document &doc,
                         const std::optional<PronounParadigm> &paradigm,
                         const ClassifierConfig &cfg,
                         const RewriteLexicon &lexicon,
                         const PipelineOptions &options);

}  // namespace incoref

#endif  // INCOREF_TRANSFORM_H_
