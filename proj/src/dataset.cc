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

#include "incoref/dataset.h"

#include <algorithm>
#include <numeric>

#include "incoref/errors.h"
#include "incoref/parallel.h"
#include "incoref/rng.h"

namespace incoref {

namespace {

constexpr std::size_t kMaxDigits = 18;

std::uint64_t ParseDigits(std::string_view digits, std::string_view text) {
  if (digits.empty() || digits.size() > kMaxDigits ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ValidationError("malformed fraction '" + std::string(text) + "'");
  }
  std::uint64_t value = 0;
  for (char c : digits) value = value * 10 + static_cast<std::uint64_t>(c - '0');
  return value;
}

// Rewrites each document under the paradigm named in `record`.
Corpus RewriteAll(const Corpus &corpus, const AssignmentRecord &record,
                  const RewriteContext &ctx) {
  Corpus out;
  out.split_label = corpus.split_label;
  std::vector<std::size_t> indices(corpus.documents.size());
  std::iota(indices.begin(), indices.end(), 0);
  out.documents = ParallelMap(indices, ctx.threads, [&](std::size_t i) {
    return PronounSpecific(corpus.documents[i], FindParadigm(record[i].paradigm),
                           ctx.cfg, ctx.lexicon, ctx.options);
  });
  return out;
}

}  // namespace

BuildResult BuildCda(const Corpus &corpus, std::uint64_t seed,
                     const RewriteContext &ctx) {
  const std::size_t n = corpus.documents.size();
  if (n == 0) throw EmptyCorpusError("cannot build a CDA corpus from no documents");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(&order);

  AssignmentRecord record(n);
  const std::size_t hen_count = (n + 1) / 2;
  for (std::size_t rank = 0; rank < n; ++rank) {
    std::size_t doc = order[rank];
    record[doc] = {corpus.documents[doc].id, rank < hen_count ? "hen" : "die"};
  }
  return {RewriteAll(corpus, record, ctx), std::move(record)};
}

Fraction Fraction::Parse(std::string_view text) {
  Fraction f;
  if (std::size_t slash = text.find('/'); slash != std::string_view::npos) {
    f.numerator = ParseDigits(text.substr(0, slash), text);
    f.denominator = ParseDigits(text.substr(slash + 1), text);
    if (f.denominator == 0) {
      throw ValidationError("fraction '" + std::string(text) + "' divides by zero");
    }
  } else {
    std::size_t dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view decimals =
        dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
    if (dot != std::string_view::npos && decimals.empty()) {
      throw ValidationError("malformed fraction '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(decimals);
    f.numerator = ParseDigits(digits, text);
    for (std::size_t i = 0; i < decimals.size(); ++i) f.denominator *= 10;
  }
  std::uint64_t g = std::gcd(f.numerator, f.denominator);
  if (g > 1) {
    f.numerator /= g;
    f.denominator /= g;
  }
  return f;
}

std::uint64_t Fraction::FloorTimes(std::uint64_t n) const {
  unsigned __int128 product = static_cast<unsigned __int128>(numerator) * n;
  return static_cast<std::uint64_t>(product / denominator);
}

std::size_t PartitionSize(std::size_t corpus_size, const PartitionSpec &spec) {
  if (spec.fraction.has_value() == spec.count.has_value()) {
    throw ValidationError("exactly one of fraction and count must be given");
  }
  if (spec.n_partitions == 0) {
    throw ValidationError("partition count must be positive");
  }
  std::size_t size = 0;
  if (spec.fraction) {
    const Fraction &f = *spec.fraction;
    if (f.numerator == 0 || f.numerator > f.denominator) {
      throw ValidationError("fraction must lie in (0, 1]");
    }
    size = f.FloorTimes(corpus_size);
  } else {
    size = *spec.count;
  }
  if (size == 0) {
    throw DegenerateFractionError("partition size rounds to zero documents");
  }
  if (size > corpus_size) {
    throw ValidationError("partition size " + std::to_string(size) +
                          " exceeds corpus size " + std::to_string(corpus_size));
  }
  return size;
}

std::vector<std::vector<std::string>> SamplePartitions(const Corpus &corpus,
                                                       const PartitionSpec &spec) {
  const std::size_t n = corpus.documents.size();
  const std::size_t size = PartitionSize(n, spec);
  Rng rng(spec.seed);
  std::vector<std::vector<std::string>> partitions;
  partitions.reserve(spec.n_partitions);
  std::vector<std::size_t> pool(n);
  for (std::size_t p = 0; p < spec.n_partitions; ++p) {
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates: the first `size` slots become the sample.
    for (std::size_t i = 0; i < size; ++i) {
      std::size_t j = i + rng.UniformIndex(n - i);
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> chosen(pool.begin(), pool.begin() + size);
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::string> ids;
    ids.reserve(size);
    for (std::size_t index : chosen) ids.push_back(corpus.documents[index].id);
    partitions.push_back(std::move(ids));
  }
  return partitions;
}

BuildResult BuildUnseen(const Corpus &corpus, std::uint64_t seed,
                        const UnseenMode &mode, const RewriteContext &ctx) {
  if (mode.fixed) FindParadigm(*mode.fixed);
  const std::vector<std::string> &names = NeopronounNames();
  Rng rng(seed);
  AssignmentRecord record;
  record.reserve(corpus.documents.size());
  for (const Document &doc : corpus.documents) {
    record.push_back(
        {doc.id, mode.fixed ? *mode.fixed : names[rng.UniformIndex(names.size())]});
  }
  return {RewriteAll(corpus, record, ctx), std::move(record)};
}

std::string FormatAssignment(const AssignmentRecord &record) {
  std::string out;
  for (const DocumentAssignment &entry : record) {
    out += entry.document_id;
    out += '\t';
    out += entry.paradigm;
    out += '\n';
  }
  return out;
}

std::string FormatPartition(const std::vector<std::string> &ids) {
  std::string out;
  for (const std::string &id : ids) {
    out += id;
    out += '\n';
  }
  return out;
}

}  // namespace incoref
