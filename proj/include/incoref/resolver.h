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

// Two-sieve heuristic resolver for running the evaluation pipeline end to end
// without a trained model.
//
// Mentions are maximal runs of name tokens (PER-tagged or ANON_x forms) and
// single third-person singular pronoun tokens. Sieve 1 merges name mentions
// with the same lowercase text. Sieve 2 attaches each pronoun to the nearest
// preceding name mention at most `pronoun_window_sentences` sentences back.
// Clusters of size one are dropped.

#ifndef INCOREF_RESOLVER_H_
#define INCOREF_RESOLVER_H_

#include <cstddef>
#include <vector>

#include "incoref/corpus.h"
#include "incoref/transform.h"

namespace incoref {

struct ResolverConfig {
  std::size_t pronoun_window_sentences = 2;
  bool enable_string_match = true;
};

struct CandidateMention {
  MentionSpan span;
  bool is_pronoun = false;
};

// Candidate mentions in document order.
std::vector<CandidateMention> ExtractMentions(const Document &doc,
                                              const ClassifierConfig &cfg);

// Copy of `doc` whose clusters are the predicted ones, numbered from 0 in
// order of first mention.
Document Resolve(const Document &doc, const ClassifierConfig &cfg,
                 const ResolverConfig &rcfg = {});

}  // namespace incoref

#endif  // INCOREF_RESOLVER_H_
