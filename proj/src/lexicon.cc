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

#include "incoref/lexicon.h"

#include <iterator>

#include "incoref/errors.h"

namespace incoref {

namespace {

enum class LetterCase { kNone, kLower, kUpper };

struct Glyph {
  std::size_t length = 1;
  LetterCase letter_case = LetterCase::kNone;
};

// Classifies the character starting at text[i]. Latin-1 letters are the
// two-byte sequences C3 80..C3 BF; upper and lower case differ by 0x20 in the
// second byte, except for the multiplication and division signs.
Glyph ReadGlyph(std::string_view text, std::size_t i) {
  unsigned char c = text[i];
  if (c >= 'a' && c <= 'z') return {1, LetterCase::kLower};
  if (c >= 'A' && c <= 'Z') return {1, LetterCase::kUpper};
  if (c == 0xC3 && i + 1 < text.size()) {
    unsigned char next = text[i + 1];
    if (next >= 0x80 && next <= 0x9E && next != 0x97) return {2, LetterCase::kUpper};
    if (next >= 0x9F && next <= 0xBF && next != 0xB7) return {2, LetterCase::kLower};
    return {2, LetterCase::kNone};
  }
  return {1, LetterCase::kNone};
}

// Converts the glyph at text[i] in place.
void SetCase(std::string *text, std::size_t i, const Glyph &glyph, LetterCase to) {
  if (glyph.letter_case == LetterCase::kNone || glyph.letter_case == to) return;
  char &c = (*text)[i + glyph.length - 1];
  if (glyph.length == 2) {
    unsigned char byte = c;
    // No single-glyph uppercase for sharp s and y-diaeresis.
    if (to == LetterCase::kUpper && (byte == 0x9F || byte == 0xBF)) return;
  }
  c = static_cast<char>(to == LetterCase::kUpper ? c - 0x20 : c + 0x20);
}

std::string ConvertAll(std::string_view text, LetterCase to) {
  std::string out(text);
  for (std::size_t i = 0; i < out.size();) {
    Glyph glyph = ReadGlyph(out, i);
    SetCase(&out, i, glyph, to);
    i += glyph.length;
  }
  return out;
}

std::vector<PronounParadigm> MakeParadigms() {
  return {
      {"hij", "hij", "hem", "zijn"},   {"zij", "zij", "haar", "haar"},
      {"hen", "hen", "hen", "hun"},    {"die", "die", "hen", "diens"},
      {"dee", "dee", "dem", "dijr"},   {"dij", "dij", "dem", "dijr"},
      {"nij", "nij", "ner", "nijr"},   {"vij", "vij", "vijn", "vijns"},
      {"zhij", "zhij", "zhaar", "zhaar"}, {"zem", "zem", "zeer", "zeer"},
  };
}

struct NounRow {
  const char *gendered;
  const char *neutral;
  bool lossy;
};

// Rows in table order; `true` marks rewrites that lose meaning.
constexpr NounRow kNounRows[] = {
    {"tante", "familielid", true},
    {"oom", "familielid", true},
    {"jongen", "kind", false},
    {"meisje", "kind", false},
    {"man", "persoon", false},
    {"vrouw", "persoon", false},
    {"mannen", "personen", false},
    {"vrouwen", "personen", false},
    {"broer", "familielid", true},
    {"zus", "familielid", true},
    {"broertje", "familielid", true},
    {"zusje", "familielid", true},
    {"broertjes", "familieleden", true},
    {"zusjes", "familieleden", true},
    {"broers", "familieleden", true},
    {"zussen", "familieleden", true},
    {"meid", "persoon", false},
    {"vader", "ouder", false},
    {"moeder", "ouder", false},
    {"vaders", "ouders", false},
    {"moeders", "ouders", false},
    {"zoon", "kind", false},
    {"zonen", "kinderen", false},
    {"dochter", "kind", false},
    {"dochters", "kinderen", false},
    {"nicht", "familielid", true},
    {"nichtje", "familielid", true},
    {"nichtjes", "familieleden", true},
    {"nichten", "familieleden", true},
    {"neef", "familielid", true},
    {"neefje", "familielid", true},
    {"neefjes", "familieleden", true},
    {"kleindochter", "kleinkind", false},
    {"kleinzoon", "kleinkind", false},
    {"kleindochters", "kleinkinderen", false},
    {"kleinzonen", "kleinkinderen", false},
    {"oma", "grootouder", false},
    {"opa", "grootouder", false},
    {"grootmoeder", "grootouder", false},
    {"grootvader", "grootouder", false},
    {"dame", "persoon", false},
    {"heer", "persoon", false},
    {"dames", "personen", false},
    {"heren", "personen", false},
    {"koning", "staatshoofd", false},
    {"koningin", "staatshoofd", false},
    {"koningen", "staatshoofden", false},
    {"koninginnen", "staatshoofden", false},
    {"mevrouw", "persoon", true},
    {"meneer", "persoon", true},
    {"jongedame", "jongere", true},
    {"jongeman", "jongere", true},
    {"politieman", "politieagent", false},
    {"politievrouw", "politieagent", false},
    {"brandweerman", "brandweermens", false},
    {"brandweervrouw", "brandweermens", false},
    {"prinses", "edele", true},
    {"prins", "edele", true},
    {"prinsessen", "edelen", true},
    {"prinsen", "edelen", true},
    {"kroonprins", "troonopvolger", false},
    {"kroonprinses", "troonopvolger", false},
    {"schrijver", "auteur", false},
    {"schrijfster", "auteur", false},
    {"juf", "leerkracht", false},
    {"meester", "leerkracht", false},
    {"leraar", "leerkracht", false},
    {"lerares", "leerkracht", false},
    {"bruid", "jonggehuwde", false},
    {"bruidegom", "jonggehuwde", false},
    {"tovenaar", "magiër", false},
    {"heks", "magiër", false},
    {"stiefvader", "stiefouder", false},
    {"stiefmoeder", "stiefouder", false},
    {"stiefzoon", "stiefkind", false},
    {"stiefdochter", "stiefkind", false},
    {"weduwe", "nabestaande", true},
    {"weduwnaar", "nabestaande", true},
    {"kok", "chef", false},
    {"kokkin", "chef", false},
    {"kunstenaar", "artiest", false},
    {"kunstenaares", "artiest", false},
    {"vriend", "maat", true},
    {"vriendin", "maat", true},
    {"vriendje", "partner", true},
    {"vriendinnetje", "partner", true},
};

std::string_view NextLine(std::string_view *text) {
  std::size_t newline = text->find('\n');
  std::string_view line = text->substr(0, newline);
  text->remove_prefix(newline == std::string_view::npos ? text->size() : newline + 1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

const std::vector<PronounParadigm> &BuiltinParadigms() {
  static const std::vector<PronounParadigm> paradigms = MakeParadigms();
  return paradigms;
}

const std::vector<std::string> &NeopronounNames() {
  static const std::vector<std::string> names = {"dee", "dij", "nij",
                                                 "vij", "zhij", "zem"};
  return names;
}

const PronounParadigm &FindParadigm(std::string_view name) {
  for (const PronounParadigm &paradigm : BuiltinParadigms()) {
    if (paradigm.name == name) return paradigm;
  }
  throw NotFoundError("unknown pronoun paradigm '" + std::string(name) + "'");
}

bool RewriteLexicon::Add(std::string_view gendered, std::string_view neutral,
                         bool lossy) {
  std::string key = ToLower(gendered);
  std::string value = ToLower(neutral);
  if (key.empty() || value.empty()) {
    throw ValidationError("lexicon entries must be non-empty");
  }
  if (key == value) {
    throw ValidationError("lexicon entry '" + key + "' maps to itself");
  }
  auto [it, inserted] = entries_.insert_or_assign(key, NounRewrite{value, lossy});
  return inserted;
}

const NounRewrite *RewriteLexicon::Find(std::string_view form) const {
  auto it = entries_.find(ToLower(form));
  return it == entries_.end() ? nullptr : &it->second;
}

const RewriteLexicon &BuiltinNounLexicon() {
  static const RewriteLexicon lexicon = [] {
    RewriteLexicon lex;
    for (const NounRow &row : kNounRows) lex.Add(row.gendered, row.neutral, row.lossy);
    return lex;
  }();
  return lexicon;
}

LexiconLoadResult LoadNounLexicon(std::string_view text) {
  LexiconLoadResult result;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    std::string_view line = NextLine(&text);
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos ||
        line.find('\t', tab2 + 1) != std::string_view::npos) {
      throw ParseError(line_number, "expected gendered<TAB>neutral<TAB>0|1");
    }
    std::string_view gendered = line.substr(0, tab1);
    std::string_view neutral = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string_view flag = line.substr(tab2 + 1);
    if (flag != "0" && flag != "1") {
      throw ParseError(line_number, "lossy flag must be 0 or 1");
    }
    try {
      if (!result.lexicon.Add(gendered, neutral, flag == "1")) {
        result.warnings.push_back("line " + std::to_string(line_number) +
                                  ": duplicate entry '" + ToLower(gendered) +
                                  "' replaces earlier one");
      }
    } catch (const ValidationError &e) {
      throw ParseError(line_number, e.what());
    }
  }
  return result;
}

LexiconLoadResult LoadNounLexicon(std::istream &in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed to read lexicon stream");
  return LoadNounLexicon(std::string_view(text));
}

std::optional<std::string> LookupNoun(const RewriteLexicon &lexicon,
                                      std::string_view form) {
  const NounRewrite *entry = lexicon.Find(form);
  if (entry == nullptr) return std::nullopt;
  return TransferCase(form, entry->neutral);
}

std::string ToLower(std::string_view text) {
  return ConvertAll(text, LetterCase::kLower);
}

std::string ToUpper(std::string_view text) {
  return ConvertAll(text, LetterCase::kUpper);
}

CasePattern DetectCase(std::string_view text) {
  std::size_t upper = 0, lower = 0;
  bool first_upper = false;
  bool seen_letter = false;
  for (std::size_t i = 0; i < text.size();) {
    Glyph glyph = ReadGlyph(text, i);
    if (glyph.letter_case == LetterCase::kUpper) {
      ++upper;
      if (!seen_letter) first_upper = true;
    } else if (glyph.letter_case == LetterCase::kLower) {
      ++lower;
    }
    if (glyph.letter_case != LetterCase::kNone) seen_letter = true;
    i += glyph.length;
  }
  if (upper == 0) return CasePattern::kLower;
  if (lower == 0 && upper >= 2) return CasePattern::kAllCaps;
  if (first_upper && upper == 1) return CasePattern::kInitialCapital;
  return CasePattern::kMixed;
}

std::string TransferCase(std::string_view original, std::string_view replacement) {
  switch (DetectCase(original)) {
    case CasePattern::kAllCaps:
      return ToUpper(replacement);
    case CasePattern::kInitialCapital: {
      std::string out(replacement);
      for (std::size_t i = 0; i < out.size();) {
        Glyph glyph = ReadGlyph(out, i);
        if (glyph.letter_case != LetterCase::kNone) {
          SetCase(&out, i, glyph, LetterCase::kUpper);
          break;
        }
        i += glyph.length;
      }
      return out;
    }
    case CasePattern::kLower:
    case CasePattern::kMixed:
      break;
  }
  return std::string(replacement);
}

}  // namespace incoref
