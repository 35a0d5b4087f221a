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

#include "incoref/transform.h"

#include <algorithm>
#include <iterator>

#include "incoref/errors.h"

namespace incoref {

namespace {

bool HasAll(const std::string &feats, const std::vector<std::string> &items) {
  return std::all_of(items.begin(), items.end(), [&feats](const std::string &item) {
    return HasFeature(feats, item);
  });
}

std::string_view Trim(std::string_view text) {
  const char *kSpace = " \t\r";
  std::size_t begin = text.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  std::size_t end = text.find_last_not_of(kSpace);
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitList(std::string_view value, char separator) {
  std::vector<std::string> items;
  if (value.empty()) return items;
  while (true) {
    std::size_t cut = value.find(separator);
    std::string_view item = Trim(value.substr(0, cut));
    if (!item.empty()) items.emplace_back(item);
    if (cut == std::string_view::npos) break;
    value.remove_prefix(cut + 1);
  }
  return items;
}

// Copies `doc` and applies `rewrite` to every token in place.
template <typename Fn>
Document RewriteTokens(const Document &doc, Fn rewrite) {
  Document out = doc;
  for (Sentence &sentence : out.sentences) {
    for (Token &token : sentence) rewrite(token);
  }
  return out;
}

}  // namespace

std::string_view RoleName(PronounRole role) {
  switch (role) {
    case PronounRole::kSubject:
      return "SUBJECT";
    case PronounRole::kObject:
      return "OBJECT";
    case PronounRole::kPossessive:
      return "POSSESSIVE";
  }
  return "";
}

const std::string &FormFor(const PronounParadigm &paradigm, PronounRole role) {
  switch (role) {
    case PronounRole::kSubject:
      return paradigm.subject_form;
    case PronounRole::kObject:
      return paradigm.object_form;
    case PronounRole::kPossessive:
      break;
  }
  return paradigm.possessive_form;
}

bool TokenPredicate::Matches(const Token &token) const {
  if (!pos.empty() && std::find(pos.begin(), pos.end(), token.pos) == pos.end()) {
    return false;
  }
  return HasAll(token.feats, feats);
}

ClassifierConfig LoadClassifierConfig(std::string_view text) {
  ClassifierConfig cfg;
  std::map<std::string, TokenPredicate *, std::less<>> predicates = {
      {"personal", &cfg.personal},
      {"possessive", &cfg.possessive},
      {"relative", &cfg.relative},
      {"demonstrative", &cfg.demonstrative},
      {"nominal", &cfg.nominal},
  };
  std::map<std::string, std::vector<std::string> *, std::less<>> lists = {
      {"nominative", &cfg.nominative},
      {"third_person", &cfg.third_person},
      {"singular", &cfg.singular},
      {"masculine", &cfg.masculine},
  };

  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    std::size_t newline = text.find('\n');
    std::string_view line = Trim(text.substr(0, newline));
    text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
    if (line.empty() || line.front() == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_number, "expected key = value");
    }
    std::string_view key = Trim(line.substr(0, eq));
    std::string_view value = Trim(line.substr(eq + 1));

    if (auto it = lists.find(key); it != lists.end()) {
      *it->second = SplitList(value, '|');
      continue;
    }
    std::size_t dot = key.rfind('.');
    auto it = dot == std::string_view::npos ? predicates.end()
                                            : predicates.find(key.substr(0, dot));
    if (it == predicates.end()) {
      throw ParseError(line_number, "unknown key '" + std::string(key) + "'");
    }
    std::string_view field = key.substr(dot + 1);
    if (field == "pos") {
      it->second->pos = SplitList(value, ',');
    } else if (field == "feats") {
      it->second->feats = SplitList(value, '|');
    } else {
      throw ParseError(line_number, "unknown key '" + std::string(key) + "'");
    }
  }
  return cfg;
}

ClassifierConfig LoadClassifierConfig(std::istream &in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed to read classifier config");
  return LoadClassifierConfig(std::string_view(text));
}

std::optional<PronounRole> ClassifyPronoun(const Token &token,
                                           const ClassifierConfig &cfg) {
  if (!HasAll(token.feats, cfg.third_person) || !HasAll(token.feats, cfg.singular)) {
    return std::nullopt;
  }
  if (cfg.possessive.Matches(token)) return PronounRole::kPossessive;
  if (cfg.personal.Matches(token)) {
    return HasAll(token.feats, cfg.nominative) ? PronounRole::kSubject
                                               : PronounRole::kObject;
  }
  return std::nullopt;
}

Document SwapPronouns(const Document &doc, const PronounParadigm &paradigm,
                      const ClassifierConfig &cfg) {
  return RewriteTokens(doc, [&](Token &token) {
    std::optional<PronounRole> role = ClassifyPronoun(token, cfg);
    if (!role) return;
    const std::string &form = FormFor(paradigm, *role);
    token.form = TransferCase(token.form, form);
    token.lemma = form;
  });
}

std::size_t AnonymizationMap::Assign(const std::string &name) {
  auto [it, inserted] = index_.emplace(name, order_.size());
  if (inserted) order_.push_back(name);
  return it->second;
}

std::optional<std::size_t> AnonymizationMap::Find(const std::string &name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string AnonymizationMap::Tag(std::size_t index) {
  return "ANON_" + std::to_string(index);
}

bool IsAnonTag(std::string_view form) {
  constexpr std::string_view kPrefix = "ANON_";
  if (!form.starts_with(kPrefix) || form.size() == kPrefix.size()) return false;
  form.remove_prefix(kPrefix.size());
  return std::all_of(form.begin(), form.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::pair<Document, AnonymizationMap> AnonymizeNames(const Document &doc) {
  AnonymizationMap names;
  Document out = RewriteTokens(doc, [&names](Token &token) {
    if (token.ner != "PER") return;
    token.form = AnonymizationMap::Tag(names.Assign(token.form));
    token.lemma = token.form;
  });
  return {std::move(out), std::move(names)};
}

Document ReplaceNouns(const Document &doc, const RewriteLexicon &lexicon,
                      const ClassifierConfig &cfg) {
  return RewriteTokens(doc, [&](Token &token) {
    if (!cfg.nominal.Matches(token)) return;
    std::optional<std::string> neutral = LookupNoun(lexicon, token.form);
    if (!neutral) return;
    token.form = std::move(*neutral);
    token.lemma = ToLower(token.form);
  });
}

Document Delexicalize(const Document &doc, const ClassifierConfig &cfg) {
  return RewriteTokens(doc, [&cfg](Token &token) {
    std::optional<PronounRole> role = ClassifyPronoun(token, cfg);
    if (!role) return;
    switch (*role) {
      case PronounRole::kSubject:
        token.form = kSubjectTag;
        break;
      case PronounRole::kObject:
        token.form = kObjectTag;
        break;
      case PronounRole::kPossessive:
        token.form = kPossessiveTag;
        break;
    }
    token.lemma = token.form;
  });
}

Document PronounSpecific(const Document &doc,
                         const std::optional<PronounParadigm> &paradigm,
                         const ClassifierConfig &cfg,
                         const RewriteLexicon &lexicon,
                         const PipelineOptions &options) {
  Document out = paradigm ? SwapPronouns(doc, *paradigm, cfg) : doc;
  if (options.anonymize) out = AnonymizeNames(out).first;
  if (options.neutralize_nouns) out = ReplaceNouns(out, lexicon, cfg);
  return out;
}

}  // namespace incoref
