// Copyright 2026 The charnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARNOISE_COMPOSER_HPP_
#define CHARNOISE_COMPOSER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charnoise/dataset_io.hpp"
#include "charnoise/edit_engine.hpp"
#include "charnoise/error.hpp"
#include "charnoise/parallel.hpp"
#include "charnoise/rational.hpp"
#include "charnoise/word_model.hpp"

namespace charnoise {

enum class CompositionMode { kJoint, kStacked };

inline CompositionMode ParseCompositionMode(std::string_view name) {
  if (name == "joint") return CompositionMode::kJoint;
  if (name == "stacked") return CompositionMode::kStacked;
  throw ConfigError("unknown composition mode '" + std::string(name) +
                    "' (expected joint or stacked)");
}

inline std::string_view ToString(CompositionMode mode) {
  return mode == CompositionMode::kJoint ? "joint" : "stacked";
}

// One output copy of the dataset. No noise config means a verbatim copy.
struct CopyDescriptor {
  std::size_t copy_index = 0;
  std::optional<NoiseConfig> noise;
};

// Joint: verbatim copy, then one copy mixing all four edit types uniformly.
// Stacked: verbatim copy, then insert, delete, replace and swap copies.
// Every noised copy runs at the plan's level and draws from its own random
// substream (the copy index is part of the stream key).
class CompositionPlan {
 public:
  static CompositionPlan Make(CompositionMode mode, Rational level, const Alphabet& alphabet,
                              std::uint64_t seed, bool match_case = false) {
    CompositionPlan plan(mode, level, seed);
    plan.copies_.push_back({0, std::nullopt});
    auto config = [&](std::vector<EditType> types, MixMode mix) {
      NoiseConfig c{level, std::move(types), mix, alphabet, seed, match_case};
      c.Validate();
      return c;
    };
    if (mode == CompositionMode::kJoint) {
      plan.copies_.push_back(
          {1, config({kAllEditTypes.begin(), kAllEditTypes.end()}, MixMode::kUniformMix)});
    } else {
      std::size_t index = 1;
      for (EditType t : kAllEditTypes) {
        plan.copies_.push_back({index++, config({t}, MixMode::kSingleType)});
      }
    }
    return plan;
  }

  CompositionMode mode() const { return mode_; }
  const Rational& level() const { return level_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<CopyDescriptor>& copies() const { return copies_; }

 private:
  CompositionPlan(CompositionMode mode, Rational level, std::uint64_t seed)
      : mode_(mode), level_(level), seed_(seed) {}

  CompositionMode mode_;
  Rational level_;
  std::uint64_t seed_;
  std::vector<CopyDescriptor> copies_;
};

// Epochs for a `copies`-copy dataset so that the total number of dataset
// passes matches `reference_epochs` over a `reference_copies`-copy dataset.
inline Rational EqualPassEpochs(std::int64_t copies, std::int64_t reference_copies,
                                std::int64_t reference_epochs) {
  if (copies < 1 || reference_copies < 1 || reference_epochs < 1) {
    throw ConfigError("copies, reference copies and reference epochs must all be positive");
  }
  return Rational(reference_copies * reference_epochs, copies);
}

struct NoisedBatch {
  std::vector<std::string> lines;
  std::vector<AuditEntry> audit;
};

// Produces the output lines of one copy for a batch of rows, in row order.
inline NoisedBatch NoiseRows(std::span<const SourceRow> rows, const CopyDescriptor& copy,
                             Format format, unsigned jobs) {
  NoisedBatch batch;
  batch.lines.reserve(rows.size());
  if (!copy.noise) {
    for (const auto& row : rows) batch.lines.push_back(row.raw);
    return batch;
  }
  const NoiseConfig& config = *copy.noise;
  auto results = ParallelMap(rows, jobs, [&](const SourceRow& row) {
    NoisedLine noised = NoiseLine(row.record.text, config, {copy.copy_index, row.line_index});
    return std::make_pair(WithText(row, noised.text, format), std::move(noised.audit));
  });
  for (auto& [line, audit] : results) {
    batch.lines.push_back(std::move(line));
    for (auto& e : audit) batch.audit.push_back(std::move(e));
  }
  return batch;
}

struct StreamStats {
  std::size_t rows = 0;
  std::size_t skipped = 0;
  std::size_t noised_words = 0;
};

using AuditSink = std::function<void(const AuditEntry&)>;

// Streams one copy from `reader` to `writer` in batches of `batch_size`
// rows, so memory stays bounded regardless of input size.
inline StreamStats StreamCopy(RecordReader& reader, RecordWriter& writer, const CopyDescriptor& copy,
                              const AuditSink& audit, unsigned jobs,
                              std::size_t batch_size = 8192) {
  StreamStats stats;
  std::vector<SourceRow> rows;
  rows.reserve(batch_size);
  auto drain = [&] {
    auto batch = NoiseRows(rows, copy, reader.format(), jobs);
    for (const auto& line : batch.lines) writer.WriteRaw(line);
    for (const auto& e : batch.audit) {
      if (audit) audit(e);
    }
    stats.rows += rows.size();
    stats.noised_words += batch.audit.size();
    rows.clear();
  };
  while (auto row = reader.Next()) {
    rows.push_back(std::move(*row));
    if (rows.size() == batch_size) drain();
  }
  if (!rows.empty()) drain();
  stats.skipped = reader.skipped();
  return stats;
}

// In-memory composition; record i uses line index i in its stream key.
inline std::vector<Record> Compose(std::span<const Record> records, const CompositionPlan& plan,
                                   std::vector<AuditEntry>* audit = nullptr) {
  std::vector<Record> out;
  out.reserve(records.size() * plan.copies().size());
  for (const auto& copy : plan.copies()) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (!copy.noise) {
        out.push_back(records[i]);
        continue;
      }
      NoisedLine noised = NoiseLine(records[i].text, *copy.noise, {copy.copy_index, i});
      Record r = records[i];
      r.text = std::move(noised.text);
      out.push_back(std::move(r));
      if (audit != nullptr) {
        for (auto& e : noised.audit) audit->push_back(std::move(e));
      }
    }
  }
  return out;
}

}  // namespace charnoise

#endif  // CHARNOISE_COMPOSER_HPP_
