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

#include "incoref/stats.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "incoref/lexicon.h"

namespace incoref {

namespace {

double Ratio(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
}

bool HasAll(const Token &token, const std::vector<std::string> &items) {
  return std::all_of(items.begin(), items.end(), [&token](const std::string &item) {
    return HasFeature(token.feats, item);
  });
}

CorpusTotals CountDocument(const Document &doc, const ClassifierConfig &cfg) {
  CorpusTotals totals;
  for (const Sentence &sentence : doc.sentences) {
    for (const Token &token : sentence) {
      ++totals.tokens;
      if (!cfg.personal.Matches(token) && !cfg.possessive.Matches(token)) continue;
      ++totals.pronouns;
      if (ClassifyPronoun(token, cfg)) ++totals.third_singular;
      if (!HasAll(token, cfg.third_person)) continue;
      ++totals.third_person;
      if (HasAll(token, cfg.masculine)) ++totals.masculine_third_person;
    }
  }
  return totals;
}

}  // namespace

const char *FunctionName(PronounFunction function) {
  switch (function) {
    case PronounFunction::kPersonalSubject:
      return "personal_subject";
    case PronounFunction::kPersonalObject:
      return "personal_object";
    case PronounFunction::kPossessive:
      return "possessive";
    case PronounFunction::kRelative:
      return "relative";
    case PronounFunction::kDemonstrative:
      return "demonstrative";
    case PronounFunction::kOther:
      break;
  }
  return "other";
}

PronounFunction ClassifyFunction(const Token &token, const ClassifierConfig &cfg) {
  if (cfg.possessive.Matches(token)) return PronounFunction::kPossessive;
  if (cfg.personal.Matches(token)) {
    return HasAll(token, cfg.nominative) ? PronounFunction::kPersonalSubject
                                         : PronounFunction::kPersonalObject;
  }
  if (cfg.relative.Matches(token)) return PronounFunction::kRelative;
  if (cfg.demonstrative.Matches(token)) return PronounFunction::kDemonstrative;
  return PronounFunction::kOther;
}

double CorpusTotals::pronoun_proportion() const { return Ratio(pronouns, tokens); }

double CorpusTotals::third_singular_share() const {
  return Ratio(third_singular, pronouns);
}

double CorpusTotals::masculine_share() const {
  return Ratio(masculine_third_person, third_person);
}

CorpusTotals &CorpusTotals::operator+=(const CorpusTotals &other) {
  tokens += other.tokens;
  pronouns += other.pronouns;
  third_person += other.third_person;
  third_singular += other.third_singular;
  masculine_third_person += other.masculine_third_person;
  return *this;
}

std::vector<std::string> FrequencyReport::UnusedAsThirdSingular() const {
  std::vector<std::string> unused;
  for (const auto &[form, frequency] : forms) {
    if (frequency.third_singular == 0) unused.push_back(form);
  }
  return unused;
}

FrequencyReport PronounFrequencies(const Corpus &corpus,
                                   const std::vector<std::string> &forms,
                                   const ClassifierConfig &cfg) {
  FrequencyReport report;
  for (const std::string &form : forms) report.forms[ToLower(form)];
  for (const Document &doc : corpus.documents) {
    report.totals += CountDocument(doc, cfg);
    for (const Sentence &sentence : doc.sentences) {
      for (const Token &token : sentence) {
        auto it = report.forms.find(ToLower(token.form));
        if (it == report.forms.end()) continue;
        FormFrequency &frequency = it->second;
        ++frequency.total;
        ++frequency.by_function[static_cast<std::size_t>(ClassifyFunction(token, cfg))];
        if (ClassifyPronoun(token, cfg)) ++frequency.third_singular;
      }
    }
  }
  return report;
}

CorpusTotals CorpusSummary(const Corpus &corpus, const ClassifierConfig &cfg) {
  CorpusTotals totals;
  for (const Document &doc : corpus.documents) totals += CountDocument(doc, cfg);
  return totals;
}

std::vector<std::string> DefaultStatsForms() {
  std::vector<std::string> forms;
  for (const PronounParadigm &paradigm : BuiltinParadigms()) {
    if (paradigm.name == "hij" || paradigm.name == "zij") continue;
    for (const std::string *form :
         {&paradigm.subject_form, &paradigm.object_form, &paradigm.possessive_form}) {
      if (std::find(forms.begin(), forms.end(), *form) == forms.end()) {
        forms.push_back(*form);
      }
    }
  }
  return forms;
}

std::string FormatFrequencyReport(const FrequencyReport &report) {
  constexpr PronounFunction kFunctions[] = {
      PronounFunction::kPersonalSubject, PronounFunction::kPersonalObject,
      PronounFunction::kPossessive,      PronounFunction::kRelative,
      PronounFunction::kDemonstrative,   PronounFunction::kOther,
  };
  std::ostringstream out;
  out << std::left << std::setw(10) << "form" << std::right << std::setw(8) << "total";
  for (PronounFunction f : kFunctions) out << std::setw(18) << FunctionName(f);
  out << std::setw(16) << "third_singular" << '\n';
  for (const auto &[form, frequency] : report.forms) {
    out << std::left << std::setw(10) << form << std::right << std::setw(8)
        << frequency.total;
    for (PronounFunction f : kFunctions) {
      out << std::setw(18) << frequency.by_function[static_cast<std::size_t>(f)];
    }
    out << std::setw(16) << frequency.third_singular << '\n';
  }

  const CorpusTotals &t = report.totals;
  out << '\n' << std::fixed << std::setprecision(6);
  out << "tokens=" << t.tokens << '\n';
  out << "pronouns=" << t.pronouns << '\n';
  out << "third_person=" << t.third_person << '\n';
  out << "third_singular=" << t.third_singular << '\n';
  out << "masculine_third_person=" << t.masculine_third_person << '\n';
  out << "pronoun_proportion=" << t.pronoun_proportion() << '\n';
  out << "third_singular_share=" << t.third_singular_share() << '\n';
  out << "masculine_share=" << t.masculine_share() << '\n';
  for (const auto &[form, frequency] : report.forms) {
    out << "form." << form << ".total=" << frequency.total << '\n';
    for (PronounFunction f : kFunctions) {
      out << "form." << form << '.' << FunctionName(f) << '='
          << frequency.by_function[static_cast<std::size_t>(f)] << '\n';
    }
    out << "form." << form << ".third_singular=" << frequency.third_singular << '\n';
  }
  std::string unused;
  for (const std::string &form : report.UnusedAsThirdSingular()) {
    if (!unused.empty()) unused += ',';
    unused += form;
  }
  out << "unused_as_third_singular=" << unused << '\n';
  return out.str();
}

}  // namespace incoref
