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

#include "incoref/conll_io.h"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "incoref/errors.h"

namespace incoref {

namespace {

constexpr std::string_view kBeginPrefix = "#begin document ";
constexpr std::string_view kEnd = "#end document";
constexpr std::string_view kSplitPrefix = "#split ";
constexpr std::size_t kColumns = 9;

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    std::size_t tab = line.find('\t');
    fields.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

std::optional<int> ParseNonNegative(std::string_view text) {
  if (text.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    return std::nullopt;
  }
  return value;
}

// Parser state for the document currently being read.
class DocumentBuilder {
 public:
  DocumentBuilder(std::string id, std::size_t begin_line)
      : begin_line_(begin_line) {
    doc_.id = std::move(id);
  }

  std::size_t begin_line() const { return begin_line_; }
  bool failed() const { return failed_; }
  const std::string &id() const { return doc_.id; }

  void Fail(std::size_t line, std::string message,
            std::vector<ParseDiagnostic> *diagnostics) {
    diagnostics->push_back({line, ParseDiagnostic::Severity::kError,
                            "document '" + doc_.id + "': " + std::move(message)});
    failed_ = true;
  }

  void AddTokenLine(std::size_t line_number, std::string_view line,
                    std::vector<ParseDiagnostic> *diagnostics) {
    if (failed_) return;
    std::vector<std::string_view> fields = SplitTabs(line);
    if (fields.size() != kColumns) {
      Fail(line_number,
           "expected " + std::to_string(kColumns) + " tab-separated columns, got " +
               std::to_string(fields.size()),
           diagnostics);
      return;
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (fields[i].empty()) {
        Fail(line_number, "column " + std::to_string(i + 1) + " is empty",
             diagnostics);
        return;
      }
    }
    std::optional<int> index = ParseNonNegative(fields[0]);
    if (!index || static_cast<std::size_t>(*index) != current_.size() + 1) {
      Fail(line_number,
           "token index '" + std::string(fields[0]) + "' should be " +
               std::to_string(current_.size() + 1),
           diagnostics);
      return;
    }
    std::optional<int> head = ParseNonNegative(fields[5]);
    if (!head) {
      Fail(line_number, "malformed head '" + std::string(fields[5]) + "'",
           diagnostics);
      return;
    }

    Token token;
    token.sentence_index = doc_.sentences.size();
    token.token_index = current_.size();
    token.form = fields[1];
    token.lemma = fields[2];
    token.pos = fields[3];
    token.feats = fields[4] == "_" ? "" : std::string(fields[4]);
    token.dep_head = *head == 0 ? Token::kRoot : *head - 1;
    token.dep_rel = fields[6];
    token.ner = fields[7];
    if (!ParseCoref(line_number, fields[8], diagnostics)) return;
    current_.push_back(std::move(token));
    token_lines_.push_back(line_number);
  }

  void EndSentence(std::vector<ParseDiagnostic> *diagnostics) {
    if (current_.empty()) return;
    if (!failed_) {
      for (std::size_t t = 0; t < current_.size(); ++t) {
        int head = current_[t].dep_head;
        if (head != Token::kRoot && static_cast<std::size_t>(head) >= current_.size()) {
          Fail(token_lines_[t],
               "head " + std::to_string(head + 1) + " exceeds sentence length " +
                   std::to_string(current_.size()),
               diagnostics);
        }
      }
      for (const auto &[id, stack] : open_) {
        for (const OpenBracket &open : stack) {
          Fail(open.line, "bracket '(" + std::to_string(id) +
                              "' is never closed within its sentence",
               diagnostics);
        }
      }
    }
    open_.clear();
    doc_.sentences.push_back(std::move(current_));
    current_.clear();
    token_lines_.clear();
  }

  // Returns the finished document, or nothing if it had errors.
  std::optional<Document> Finish(std::vector<ParseDiagnostic> *diagnostics) {
    EndSentence(diagnostics);
    if (failed_) return std::nullopt;
    for (auto &[id, spans] : spans_) {
      std::sort(spans.begin(), spans.end());
      doc_.clusters.push_back({id, std::move(spans)});
    }
    for (const ValidationIssue &issue : ValidateDocument(doc_)) {
      bool error = issue.severity == ValidationIssue::Severity::kError;
      diagnostics->push_back({begin_line_,
                              error ? ParseDiagnostic::Severity::kError
                                    : ParseDiagnostic::Severity::kWarning,
                              issue.message});
      if (error) failed_ = true;
    }
    if (failed_) return std::nullopt;
    return std::move(doc_);
  }

 private:
  struct OpenBracket {
    std::size_t token = 0;
    std::size_t line = 0;
  };

  bool ParseCoref(std::size_t line_number, std::string_view field,
                  std::vector<ParseDiagnostic> *diagnostics) {
    if (field == "-") return true;
    const std::size_t sentence = doc_.sentences.size();
    const std::size_t token = current_.size();
    while (true) {
      std::size_t bar = field.find('|');
      std::string_view entry = field.substr(0, bar);
      bool opens = !entry.empty() && entry.front() == '(';
      bool closes = !entry.empty() && entry.back() == ')';
      std::string_view digits = entry;
      if (opens) digits.remove_prefix(1);
      if (closes && !digits.empty()) digits.remove_suffix(1);
      std::optional<int> id = ParseNonNegative(digits);
      if ((!opens && !closes) || !id) {
        Fail(line_number, "malformed coreference entry '" + std::string(entry) + "'",
             diagnostics);
        return false;
      }
      if (opens && closes) {
        if (!AddSpan(*id, {sentence, token, token}, line_number, diagnostics)) return false;
      } else if (opens) {
        open_[*id].push_back({token, line_number});
      } else {
        auto it = open_.find(*id);
        if (it == open_.end() || it->second.empty()) {
          Fail(line_number,
               "closing bracket '" + std::to_string(*id) + ")' has no open match",
               diagnostics);
          return false;
        }
        MentionSpan span{sentence, it->second.back().token, token};
        it->second.pop_back();
        if (!AddSpan(*id, span, line_number, diagnostics)) return false;
        if (it->second.empty()) open_.erase(it);
      }
      if (bar == std::string_view::npos) break;
      field.remove_prefix(bar + 1);
    }
    return true;
  }

  bool AddSpan(int id, const MentionSpan &span, std::size_t line_number,
               std::vector<ParseDiagnostic> *diagnostics) {
    std::vector<MentionSpan> &spans = spans_[id];
    if (std::find(spans.begin(), spans.end(), span) != spans.end()) {
      Fail(line_number, "cluster " + std::to_string(id) + " annotates the same span twice",
           diagnostics);
      return false;
    }
    spans.push_back(span);
    return true;
  }

  Document doc_;
  std::size_t begin_line_;
  bool failed_ = false;
  Sentence current_;
  std::vector<std::size_t> token_lines_;
  std::map<int, std::vector<OpenBracket>> open_;
  std::map<int, std::vector<MentionSpan>> spans_;
};

std::string CheckedColumn(const std::string &value, const char *name,
                          const Document &doc) {
  if (value.empty() || value.find_first_of("\t\n\r") != std::string::npos) {
    throw ValidationError("document '" + doc.id + "': " + name +
                          " column is empty or contains a tab or newline");
  }
  return value;
}

void CheckRepresentable(const Document &doc) {
  if (doc.id.find_first_of("\n\r") != std::string::npos) {
    throw ValidationError("document id contains a newline");
  }
  for (const Cluster &cluster : doc.clusters) {
    const auto &m = cluster.mentions;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (m[j].sentence_index != m[i].sentence_index) break;
        if (m[i].start < m[j].start && m[j].start <= m[i].end &&
            m[i].end < m[j].end) {
          throw ValidationError("document '" + doc.id + "': cluster " +
                                std::to_string(cluster.id) +
                                " has crossing mentions, which brackets cannot encode");
        }
      }
    }
  }
}

std::string CorefColumn(std::vector<int> opens, std::vector<int> singles,
                        std::vector<int> closes) {
  std::sort(opens.begin(), opens.end());
  std::sort(singles.begin(), singles.end());
  std::sort(closes.begin(), closes.end());
  std::string out;
  auto append = [&out](const std::string &entry) {
    if (!out.empty()) out += '|';
    out += entry;
  };
  for (int id : opens) append("(" + std::to_string(id));
  for (int id : singles) append("(" + std::to_string(id) + ")");
  for (int id : closes) append(std::to_string(id) + ")");
  return out.empty() ? "-" : out;
}

void WriteDocument(const Document &doc, std::string *out) {
  CheckRepresentable(doc);
  struct Marks {
    std::vector<int> opens, singles, closes;
  };
  std::map<std::pair<std::size_t, std::size_t>, Marks> marks;
  for (const Cluster &cluster : doc.clusters) {
    for (const MentionSpan &span : cluster.mentions) {
      if (span.start == span.end) {
        marks[{span.sentence_index, span.start}].singles.push_back(cluster.id);
      } else {
        marks[{span.sentence_index, span.start}].opens.push_back(cluster.id);
        marks[{span.sentence_index, span.end}].closes.push_back(cluster.id);
      }
    }
  }

  *out += kBeginPrefix;
  *out += doc.id;
  *out += '\n';
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    for (std::size_t t = 0; t < doc.sentences[s].size(); ++t) {
      const Token &token = doc.sentences[s][t];
      std::string coref = "-";
      if (auto it = marks.find({s, t}); it != marks.end()) {
        coref = CorefColumn(it->second.opens, it->second.singles, it->second.closes);
      }
      *out += std::to_string(t + 1);
      *out += '\t';
      *out += CheckedColumn(token.form, "form", doc);
      *out += '\t';
      *out += CheckedColumn(token.lemma, "lemma", doc);
      *out += '\t';
      *out += CheckedColumn(token.pos, "pos", doc);
      *out += '\t';
      *out += token.feats.empty() ? std::string("_")
                                  : CheckedColumn(token.feats, "feats", doc);
      *out += '\t';
      *out += std::to_string(token.dep_head == Token::kRoot ? 0 : token.dep_head + 1);
      *out += '\t';
      *out += CheckedColumn(token.dep_rel, "deprel", doc);
      *out += '\t';
      *out += CheckedColumn(token.ner, "ner", doc);
      *out += '\t';
      *out += coref;
      *out += '\n';
    }
    *out += '\n';
  }
  *out += kEnd;
  *out += '\n';
}

}  // namespace

std::string ParseDiagnostic::ToString() const {
  return "line " + std::to_string(line_number) + ": " +
         (severity == Severity::kError ? "error: " : "warning: ") + message;
}

ParseResult ParseCorpus(std::string_view text) {
  ParseResult result;
  std::vector<ParseDiagnostic> &diagnostics = result.diagnostics;
  std::optional<DocumentBuilder> current;
  std::set<std::string> seen_ids;
  bool warned_cr = false;
  std::size_t line_number = 0;

  auto finish = [&]() {
    std::optional<Document> doc = current->Finish(&diagnostics);
    if (doc) result.corpus.documents.push_back(std::move(*doc));
    current.reset();
  };

  while (!text.empty()) {
    ++line_number;
    std::size_t newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
      if (!warned_cr) {
        diagnostics.push_back({line_number, ParseDiagnostic::Severity::kWarning,
                               "carriage returns stripped from line endings"});
        warned_cr = true;
      }
    }

    if (line.starts_with(kBeginPrefix) || line == "#begin document") {
      if (current) {
        current->Fail(current->begin_line(), "missing '#end document'", &diagnostics);
        finish();
      }
      std::string id(line.size() > kBeginPrefix.size()
                         ? line.substr(kBeginPrefix.size())
                         : std::string_view());
      current.emplace(id, line_number);
      if (id.empty()) {
        current->Fail(line_number, "empty document id", &diagnostics);
      } else if (!seen_ids.insert(id).second) {
        current->Fail(line_number, "duplicate document id", &diagnostics);
      }
      continue;
    }
    if (line == kEnd) {
      if (!current) {
        diagnostics.push_back({line_number, ParseDiagnostic::Severity::kError,
                               "'#end document' without matching begin"});
        continue;
      }
      finish();
      continue;
    }
    if (!current) {
      if (line.empty()) continue;
      if (line.starts_with(kSplitPrefix) && result.corpus.documents.empty() &&
          !result.corpus.split_label) {
        result.corpus.split_label = std::string(line.substr(kSplitPrefix.size()));
        continue;
      }
      diagnostics.push_back({line_number,
                             line.front() == '#' ? ParseDiagnostic::Severity::kWarning
                                                 : ParseDiagnostic::Severity::kError,
                             "line outside any document ignored"});
      continue;
    }
    if (line.empty()) {
      current->EndSentence(&diagnostics);
    } else if (line.front() == '#') {
      diagnostics.push_back({line_number, ParseDiagnostic::Severity::kWarning,
                             "comment line inside document ignored"});
    } else {
      current->AddTokenLine(line_number, line, &diagnostics);
    }
  }
  if (current) {
    current->Fail(current->begin_line(), "missing '#end document' at end of input",
                  &diagnostics);
    finish();
  }

  if (result.corpus.documents.empty()) {
    std::string message = "no parseable documents";
    for (const ParseDiagnostic &d : diagnostics) {
      if (d.severity == ParseDiagnostic::Severity::kError) {
        message += "; " + d.ToString();
      }
    }
    throw EmptyCorpusError(message);
  }
  return result;
}

ParseResult ParseCorpus(std::istream &in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed to read corpus stream");
  return ParseCorpus(std::string_view(text));
}

std::string SerializeDocument(const Document &doc) {
  CheckValid(doc);
  std::string out;
  WriteDocument(doc, &out);
  return out;
}

std::string SerializeCorpus(const Corpus &corpus) {
  CheckValid(corpus);
  std::string out;
  if (corpus.split_label) {
    if (corpus.split_label->empty() ||
        corpus.split_label->find_first_of("\n\r") != std::string::npos) {
      throw ValidationError("split label is empty or contains a newline");
    }
    out += kSplitPrefix;
    out += *corpus.split_label;
    out += '\n';
  }
  for (const Document &doc : corpus.documents) WriteDocument(doc, &out);
  return out;
}

Document StripSingletons(const Document &doc) {
  Document out;
  out.id = doc.id;
  out.sentences = doc.sentences;
  std::copy_if(doc.clusters.begin(), doc.clusters.end(),
               std::back_inserter(out.clusters),
               [](const Cluster &cluster) { return cluster.size() >= 2; });
  return out;
}

}  // namespace incoref
