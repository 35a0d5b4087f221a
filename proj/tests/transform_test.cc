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

#include <doctest.h>

#include <map>
#include <string>

#include "incoref/conll_io.h"
#include "incoref/errors.h"
#include "incoref/transform.h"
#include "test_util.h"

namespace incoref {
namespace {

using testing::SentenceDocument;
using testing::Text;
using testing::VocabEntry;

constexpr const char *kSubj = "Case=Nom|Gender=Masc|Number=Sing|Person=3|PronType=Prs";
constexpr const char *kObj = "Case=Acc|Gender=Masc|Number=Sing|Person=3|PronType=Prs";
constexpr const char *kPoss = "Gender=Masc|Number=Sing|Person=3|Poss=Yes|PronType=Prs";

Token Tok(const char *form, const char *pos, const char *feats) {
  Token t;
  t.form = form;
  t.pos = pos;
  t.feats = feats;
  return t;
}

bool SameShape(const Document &a, const Document &b) {
  if (a.clusters != b.clusters || a.sentences.size() != b.sentences.size()) return false;
  for (std::size_t s = 0; s < a.sentences.size(); ++s) {
    if (a.sentences[s].size() != b.sentences[s].size()) return false;
  }
  return true;
}

TEST_CASE("pronoun classification") {
  ClassifierConfig cfg;
  CHECK(ClassifyPronoun(Tok("hij", "PRON", kSubj), cfg) == PronounRole::kSubject);
  CHECK(ClassifyPronoun(Tok("haar", "PRON", "Gender=Fem|Number=Sing|Person=3|Poss=Yes|PronType=Prs"),
                        cfg) == PronounRole::kPossessive);
  CHECK(ClassifyPronoun(Tok("haar", "PRON", "Case=Acc|Gender=Fem|Number=Sing|Person=3|PronType=Prs"),
                        cfg) == PronounRole::kObject);
  CHECK(ClassifyPronoun(Tok("zijn", "DET", kPoss), cfg) == PronounRole::kPossessive);
  CHECK_FALSE(ClassifyPronoun(Tok("die", "PRON", "PronType=Rel"), cfg));
  CHECK_FALSE(ClassifyPronoun(Tok("die", "PRON", "PronType=Dem"), cfg));
  CHECK_FALSE(ClassifyPronoun(Tok("hen", "PRON", "Case=Acc|Number=Plur|Person=3|PronType=Prs"), cfg));
  CHECK_FALSE(ClassifyPronoun(Tok("ik", "PRON", "Case=Nom|Number=Sing|Person=1|PronType=Prs"), cfg));
  CHECK_FALSE(ClassifyPronoun(Tok("hij", "NOUN", kSubj), cfg));
}

TEST_CASE("classifier configuration file") {
  ClassifierConfig cfg = LoadClassifierConfig(std::string_view(
      "# tagset\npersonal.pos = PRON, VNW\npersonal.feats = PronType=Prs\n"
      "nominative = Case=Nom|Person=3\n"));
  CHECK(cfg.personal.pos == std::vector<std::string>{"PRON", "VNW"});
  CHECK(cfg.nominative == std::vector<std::string>{"Case=Nom", "Person=3"});
  CHECK(cfg.possessive == ClassifierConfig().possessive);
  CHECK(ClassifyPronoun(Tok("hij", "VNW", kSubj), cfg) == PronounRole::kSubject);
  CHECK(ClassifyPronoun(Tok("hij", "VNW", "Case=Nom|Number=Sing|PronType=Prs"), cfg) ==
        std::nullopt);
  CHECK_THROWS_AS(LoadClassifierConfig(std::string_view("bogus.pos = X\n")), ParseError);
  CHECK_THROWS_AS(LoadClassifierConfig(std::string_view("personal.pos\n")), ParseError);
  CHECK_THROWS_AS(LoadClassifierConfig(std::string_view("personal.lemma = x\n")), ParseError);
  CHECK(LoadClassifierConfig(std::string_view("")) == ClassifierConfig());
}

TEST_CASE("swapping the example sentence") {
  ClassifierConfig cfg;
  Document doc = testing::LoadFixtureDocument("recovery.conll");
  Document hen = SwapPronouns(doc, FindParadigm("hen"), cfg);
  CHECK(SentenceText(hen.sentences[0]) ==
        "Na hun herstel vindt hen hun vrouw en hun moeder terug in Folkestone.");
  CHECK(hen.token(0, 4).lemma == "hen");
  CHECK(hen.token(0, 4).feats == doc.token(0, 4).feats);
  CHECK(SameShape(hen, doc));
  Document die = SwapPronouns(doc, FindParadigm("die"), cfg);
  CHECK(SentenceText(die.sentences[0]) ==
        "Na diens herstel vindt die diens vrouw en diens moeder terug in Folkestone.");

  Document plain = SentenceDocument({{"Ik", "PRON", "Case=Nom|Number=Sing|Person=1|PronType=Prs", "O"},
                                     {"loop", "VERB", "", "O"}});
  CHECK(SwapPronouns(plain, FindParadigm("zem"), cfg) == plain);

  Document caps = SentenceDocument({{"Hij", "PRON", kSubj, "O"}, {"ZIJN", "PRON", kPoss, "O"}});
  CHECK(Text(SwapPronouns(caps, FindParadigm("zhij"), cfg)) == "Zhij ZHAAR");
}

TEST_CASE("swapping is idempotent and leaves the coreference layer alone") {
  ClassifierConfig cfg;
  Rng rng(31);
  for (int round = 0; round < 200; ++round) {
    Document doc = testing::RandomDocument(rng, "d");
    for (const PronounParadigm &p : BuiltinParadigms()) {
      Document once = SwapPronouns(doc, p, cfg);
      CHECK(SameShape(once, doc));
      CHECK(SwapPronouns(once, p, cfg) == once);
      CHECK(Delexicalize(once, cfg) == Delexicalize(doc, cfg));
      CHECK(StripSingletons(once) == SwapPronouns(StripSingletons(doc), p, cfg));
    }
  }
}

TEST_CASE("anonymising names") {
  Document doc = testing::LoadFixtureDocument("anonymize.conll");
  auto [anon, map] = AnonymizeNames(doc);
  CHECK(Text(anon) == "ANON_0 ANON_1 is op vrijdag vrij omdat ANON_0 dan voetbalt");
  CHECK(map.names() == std::vector<std::string>{"Jan", "Jansen"});
  CHECK(anon.token(0, 0).lemma == "ANON_0");
  CHECK(anon.clusters == doc.clusters);

  Document none = SentenceDocument({{"de", "DET", "", "O"}, {"tafel", "NOUN", "", "O"}});
  auto [same, empty] = AnonymizeNames(none);
  CHECK(same == none);
  CHECK(empty.empty());

  CHECK(IsAnonTag("ANON_12"));
  CHECK_FALSE(IsAnonTag("ANON_"));
  CHECK_FALSE(IsAnonTag("ANON_1a"));
  CHECK(AnonymizationMap::Tag(3) == "ANON_3");
}

TEST_CASE("anonymisation indices follow first occurrence") {
  Rng rng(32);
  const char *names[] = {"Jan", "Marie", "jan", "Els"};
  for (int round = 0; round < 300; ++round) {
    std::vector<VocabEntry> rows;
    std::size_t n = 1 + rng.UniformIndex(12);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.UniformIndex(2) == 0) {
        rows.push_back({names[rng.UniformIndex(4)], "PROPN", "", "PER"});
      } else {
        rows.push_back({"en", "CCONJ", "", "O"});
      }
    }
    Document doc = SentenceDocument(rows);
    auto [anon, map] = AnonymizeNames(doc);
    std::map<std::string, int> first;
    for (std::size_t i = 0; i < n; ++i) {
      std::string form = rows[i].form;
      if (std::string(rows[i].ner) != "PER") {
        CHECK(anon.token(0, i).form == form);
        continue;
      }
      if (!first.count(form)) {
        int next = static_cast<int>(first.size());
        first[form] = next;
      }
      CHECK(anon.token(0, i).form == "ANON_" + std::to_string(first[form]));
    }
    CHECK(map.size() == first.size());
  }
}

TEST_CASE("replacing gendered nouns") {
  ClassifierConfig cfg;
  const RewriteLexicon &lex = BuiltinNounLexicon();
  Document doc = SentenceDocument({{"Vader", "NOUN", "", "O"},
                                   {"en", "CCONJ", "", "O"},
                                   {"haar", "PRON", "", "O"},
                                   {"kind", "NOUN", "", "O"}});
  Document out = ReplaceNouns(doc, lex, cfg);
  CHECK(Text(out) == "Ouder en haar kind");
  CHECK(out.token(0, 0).lemma == "ouder");

  Document verb = SentenceDocument({{"man", "VERB", "", "O"}, {"stoel", "NOUN", "", "O"}});
  CHECK(ReplaceNouns(verb, lex, cfg) == verb);

  Document table = testing::LoadFixtureDocument("recovery.conll");
  CHECK(SentenceText(ReplaceNouns(table, lex, cfg).sentences[0]) ==
        "Na zijn herstel vindt hij zijn persoon en zijn ouder terug in Folkestone.");
}

TEST_CASE("delexicalisation") {
  ClassifierConfig cfg;
  Document a = SentenceDocument({{"hij", "PRON", kSubj, "O"},
                                 {"vindt", "VERB", "", "O"},
                                 {"zijn", "PRON", kPoss, "O"},
                                 {"boek", "NOUN", "", "O"}});
  CHECK(Text(Delexicalize(a, cfg)) == "<SUBJ> vindt <POSS> boek");
  Document b = SentenceDocument({{"Zij", "PRON", "Case=Nom|Gender=Fem|Number=Sing|Person=3|PronType=Prs", "O"},
                                 {"zag", "VERB", "", "O"},
                                 {"hem", "PRON", kObj, "O"}});
  CHECK(Text(Delexicalize(b, cfg)) == "<SUBJ> zag <OBJ>");
  Document c = SentenceDocument({{"de", "DET", "", "O"}, {"tafel", "NOUN", "", "O"}});
  CHECK(Delexicalize(c, cfg) == c);
}

TEST_CASE("full pronoun-specific pipeline") {
  ClassifierConfig cfg;
  const RewriteLexicon &lex = BuiltinNounLexicon();
  Document doc = testing::LoadFixtureDocument("recovery.conll");
  PipelineOptions both{true, true};
  auto run = [&](const char *name) {
    return SentenceText(PronounSpecific(doc, FindParadigm(name), cfg, lex, both).sentences[0]);
  };
  CHECK(run("hen") == "Na hun herstel vindt hen hun persoon en hun ouder terug in Folkestone.");
  CHECK(run("zij") == "Na haar herstel vindt zij haar persoon en haar ouder terug in Folkestone.");
  CHECK(run("die") == "Na diens herstel vindt die diens persoon en diens ouder terug in Folkestone.");
  CHECK(run("hij") == "Na zijn herstel vindt hij zijn persoon en zijn ouder terug in Folkestone.");
  CHECK(SentenceText(PronounSpecific(doc, std::nullopt, cfg, lex, both).sentences[0]) ==
        "Na zijn herstel vindt hij zijn persoon en zijn ouder terug in Folkestone.");
  CHECK(PronounSpecific(doc, std::nullopt, cfg, lex, {}) == doc);
}

TEST_CASE("every transform commutes with singleton stripping") {
  ClassifierConfig cfg;
  const RewriteLexicon &lex = BuiltinNounLexicon();
  Rng rng(33);
  for (int round = 0; round < 200; ++round) {
    Document doc = testing::RandomDocument(rng, "d");
    Document stripped = StripSingletons(doc);
    CHECK(StripSingletons(AnonymizeNames(doc).first) == AnonymizeNames(stripped).first);
    CHECK(StripSingletons(ReplaceNouns(doc, lex, cfg)) == ReplaceNouns(stripped, lex, cfg));
    CHECK(StripSingletons(Delexicalize(doc, cfg)) == Delexicalize(stripped, cfg));
  }
}

}  // namespace
}  // namespace incoref
