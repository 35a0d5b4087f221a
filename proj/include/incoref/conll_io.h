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

// Reader and writer for the tab-separated corpus format.
//
//   #split <label>                  optional, before the first document
//   #begin document <id>
//   1<TAB>form<TAB>lemma<TAB>pos<TAB>feats<TAB>head<TAB>deprel<TAB>ner<TAB>coref
//   ...
//   <blank line after every sentence>
//   #end document
//
// Token index is 1-based within the sentence, head 0 is the root, empty
// feats are written as "_". The coref column holds "-" or '|'-joined entries
// "(id", "id)" and "(id)". Entries on one token are written opens first, then
// single-token mentions, then closes, each group by ascending id.

#ifndef INCOREF_CONLL_IO_H_
#define INCOREF_CONLL_IO_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "incoref/corpus.h"

namespace incoref {

struct ParseDiagnostic {
  enum class Severity { kError, kWarning };

  std::size_t line_number = 0;  // 1-based
  Severity severity = Severity::kError;
  std::string message;

  std::string ToString() const;
};

struct ParseResult {
  Corpus corpus;
  std::vector<ParseDiagnostic> diagnostics;
};

// Parses a corpus. Documents with errors are dropped and reported; the rest
// are kept. Throws EmptyCorpusError if no document survives and IoError if
// the stream fails.
ParseResult ParseCorpus(std::string_view text);
ParseResult ParseCorpus(std::istream &in);

// Writes the canonical form. Throws ValidationError if the corpus is invalid
// or not representable (empty columns, tabs or newlines inside a column,
// crossing mentions within one cluster).
std::string SerializeCorpus(const Corpus &corpus);
std::string SerializeDocument(const Document &doc);

// Drops every cluster with fewer than two mentions.
Document StripSingletons(const Document &doc);

}  // namespace incoref

#endif  // INCOREF_CONLL_IO_H_
