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

#ifndef INCOREF_LEXICON_H_
#define INCOREF_LEXICON_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace incoref {

// Dutch third-person pronoun set. Forms are lowercase.
struct PronounParadigm {
  std::string name;
  std::string subject_form;
  std::string object_form;
  std::string possessive_form;

  bool operator==(const PronounParadigm &other) const = default;
};

// hij, zij, hen, die and the six neopronoun sets, in that order.
const std::vector<PronounParadigm> &BuiltinParadigms();

// Names of the neopronoun paradigms used for unseen-pronoun test sets.
const std::vector<std::string> &NeopronounNames();

// Throws NotFoundError for unknown names.
const PronounParadigm &FindParadigm(std::string_view name);

struct NounRewrite {
  std::string neutral;
  // Replacement loses part of the meaning (e.g. niece -> family member).
  bool lossy = false;

  bool operator==(const NounRewrite &other) const = default;
};

class RewriteLexicon {
 public:
  RewriteLexicon() = default;

  // Keys are lowercased. Returns false if the key was already present (the
  // new value replaces the old one). Throws ValidationError when the key maps
  // to itself or either side is empty.
  bool Add(std::string_view gendered, std::string_view neutral, bool lossy);

  // Case-insensitive lookup of the raw entry.
  const NounRewrite *Find(std::string_view form) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, NounRewrite> &entries() const { return entries_; }

 private:
  std::map<std::string, NounRewrite> entries_;
};

// The gendered-noun rewriting table (86 rows).
const RewriteLexicon &BuiltinNounLexicon();

struct LexiconLoadResult {
  RewriteLexicon lexicon;
  std::vector<std::string> warnings;
};

// Reads "gendered<TAB>neutral<TAB>0|1" lines. Blank lines and lines starting
// with '#' are skipped. Duplicate keys: last wins, with a warning. Throws
// ParseError on malformed lines.
LexiconLoadResult LoadNounLexicon(std::string_view text);
LexiconLoadResult LoadNounLexicon(std::istream &in);

// Returns the neutral replacement for `form`, carrying over an initial
// capital or all-caps spelling.
std::optional<std::string> LookupNoun(const RewriteLexicon &lexicon,
                                      std::string_view form);

// Case helpers. These handle ASCII and the Latin-1 letters of UTF-8 (which
// covers Dutch diacritics); other bytes pass through unchanged.
std::string ToLower(std::string_view text);
std::string ToUpper(std::string_view text);

enum class CasePattern { kLower, kInitialCapital, kAllCaps, kMixed };

CasePattern DetectCase(std::string_view text);

// Renders the lowercase `replacement` in the case pattern of `original`.
// Mixed-case originals yield the lowercase replacement.
std::string TransferCase(std::string_view original, std::string_view replacement);

}  // namespace incoref

#endif  // INCOREF_LEXICON_H_
