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

#ifndef INCOREF_STATS_H_
#define INCOREF_STATS_H_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "incoref/corpus.h"
#include "incoref/transform.h"

namespace incoref {

enum class PronounFunction {
  kPersonalSubject,
  kPersonalObject,
  kPossessive,
  kRelative,
  kDemonstrative,
  kOther,
};

inline constexpr std::size_t kPronounFunctionCount = 6;

const char *FunctionName(PronounFunction function);

// Grammatical function of any token, regardless of person and number.
PronounFunction ClassifyFunction(const Token &token, const ClassifierConfig &cfg);

struct FormFrequency {
  std::size_t total = 0;
  std::array<std::size_t, kPronounFunctionCount> by_function{};
  std::size_t third_singular = 0;

  bool operator==(const FormFrequency &other) const = default;
};

struct CorpusTotals {
  std::size_t tokens = 0;
  // Personal and possessive pronouns of any person and number.
  std::size_t pronouns = 0;
  std::size_t third_person = 0;
  std::size_t third_singular = 0;
  std::size_t masculine_third_person = 0;

  double pronoun_proportion() const;
  double third_singular_share() const;
  double masculine_share() const;

  CorpusTotals &operator+=(const CorpusTotals &other);
  bool operator==(const CorpusTotals &other) const = default;
};

struct FrequencyReport {
  // Keyed by the requested forms, lowercased.
  std::map<std::string, FormFrequency> forms;
  CorpusTotals totals;

  // Forms never used as third-person singular pronouns.
  std::vector<std::string> UnusedAsThirdSingular() const;
};

// Case-insensitive counts of `forms`, split by grammatical function, plus
// corpus totals.
FrequencyReport PronounFrequencies(const Corpus &corpus,
                                   const std::vector<std::string> &forms,
                                   const ClassifierConfig &cfg);

CorpusTotals CorpusSummary(const Corpus &corpus, const ClassifierConfig &cfg);

// Forms of the gender-neutral and neopronoun paradigms.
std::vector<std::string> DefaultStatsForms();

// Aligned table followed by a key=value block.
std::string FormatFrequencyReport(const FrequencyReport &report);

}  // namespace incoref

#endif  // INCOREF_STATS_H_
